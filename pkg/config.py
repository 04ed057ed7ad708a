import os
from dotenv import load_dotenv

load_dotenv()

# Parser Configuration
MAX_WORD_LENGTH = int(os.getenv('UVB_MAX_WORD_LENGTH', '1000000'))

# Logging Configuration
LOG_LEVEL = os.getenv('UVB_LOG_LEVEL', 'INFO').upper()
SHOW_PROGRESS = os.getenv('UVB_SHOW_PROGRESS', 'true').lower() == 'true'

# Selftest Configuration
DEFAULT_SEED = int(os.getenv('UVB_DEFAULT_SEED', '20240601'))
SELFTEST_MAX_N = int(os.getenv('UVB_SELFTEST_MAX_N', '6'))
SELFTEST_PRESENTATION_MAX_N = int(os.getenv('UVB_SELFTEST_PRESENTATION_MAX_N', '5'))

# Trial counts per property
TORSION_TRIALS = int(os.getenv('UVB_TORSION_TRIALS', '1000'))
BRUTE_FORCE_TRIALS = int(os.getenv('UVB_BRUTE_FORCE_TRIALS', '1000'))
EVEN_ORDER_TRIALS = int(os.getenv('UVB_EVEN_ORDER_TRIALS', '500'))
COBOUNDARY_TRIALS = int(os.getenv('UVB_COBOUNDARY_TRIALS', '1000'))
LIFT_TRIALS = int(os.getenv('UVB_LIFT_TRIALS', '200'))
HOMOMORPHISM_TRIALS = int(os.getenv('UVB_HOMOMORPHISM_TRIALS', '500'))

# Length budgets for random elements
# MAX_PURE_LENGTH: letters in a random pure conjugator g
# MAX_F2_LENGTH: letters in a random rank-2 free group word
MAX_PURE_LENGTH = int(os.getenv('UVB_MAX_PURE_LENGTH', '20'))
MAX_F2_LENGTH = int(os.getenv('UVB_MAX_F2_LENGTH', '30'))
