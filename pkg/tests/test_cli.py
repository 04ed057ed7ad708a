import json
import unittest

from uvb_cli import run_command


class TestWordCommands(unittest.TestCase):
    def test_nf_json(self):
        code, text = run_command(["nf", "s1 s1", "--n", "3", "--json"])
        self.assertEqual(code, 0)
        self.assertEqual(text, '{"n":3,"perm":[1,2,3],"pure":[{"pair":[1,2],"word":[[1,2,-1],[2,1,-1]]}]}')

    def test_nf_json_is_stable(self):
        self.assertEqual(run_command(["nf", "s1 r2 S1", "--json"]), run_command(["nf", "s1 r2 S1", "--json"]))

    def test_nf_text(self):
        self.assertEqual(run_command(["nf", "s1"]), (0, "perm [2,1]\npure F1,2: l1,2^-1"))

    def test_order(self):
        self.assertEqual(run_command(["order", "r1 r2", "--n", "3"]), (0, "3"))
        self.assertEqual(run_command(["order", "s1"]), (0, "infinite"))
        self.assertEqual(run_command(["order", "s1", "--json"]), (0, '{"order":null}'))

    def test_conjugate_to_perm(self):
        code, text = run_command(["conjugate-to-perm", "r1 S1 r1 s1 r1", "--json"])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text)["perm"], [2, 1])

    def test_booleans(self):
        self.assertEqual(run_command(["in-im-eta", "s1 s2"]), (0, "true"))
        self.assertEqual(run_command(["in-im-eta", "r1"]), (0, "false"))
        self.assertEqual(run_command(["in-cn", "r2 r1"]), (0, "true"))
        self.assertEqual(run_command(["in-cn", "s1", "--json"]), (0, '{"result":false}'))

    def test_project(self):
        self.assertEqual(run_command(["project", "s1 s1", "--json"]),
                         (0, '{"perm":[1,2],"vector":[{"coeff":-2,"pair":[1,2]}]}'))

    def test_writhe(self):
        self.assertEqual(run_command(["writhe", "s1 s2 S1"]), (0, "1"))


class TestLift(unittest.TestCase):
    def test_insertion(self):
        self.assertEqual(run_command(["lift", "[3,1,2]"]), (0, "r2 r1"))
        self.assertEqual(run_command(["lift", "[3, 2, 1]"]), (0, "r1 r2 r1"))

    def test_bubble(self):
        self.assertEqual(run_command(["lift", "[3,2,1]", "--method", "bubble"]), (0, "r2 r1 r2"))

    def test_json(self):
        self.assertEqual(run_command(["lift", "[3,1,2]", "--json"]), (0, '{"perm":[3,1,2],"word":"r2 r1"}'))
        self.assertEqual(run_command(["lift", "[1,2]", "--json"]), (0, '{"perm":[1,2],"word":""}'))

    def test_lifted_word_feeds_nf(self):
        _, word = run_command(["lift", "[2,3,1]"])
        self.assertEqual(run_command(["nf", word, "--n", "3"]), (0, "perm [2,3,1]\npure 1"))

    def test_malformed_permutation(self):
        self.assertEqual(run_command(["lift", "[1,1]"]), (2, ""))
        self.assertEqual(run_command(["lift", "2,1"]), (2, ""))


class TestPairCommands(unittest.TestCase):
    def test_eq(self):
        self.assertEqual(run_command(["eq", "r1 s2 s1", "s2 s1 r2", "--n", "3"]), (0, "true"))
        self.assertEqual(run_command(["eq", "s1", "r1"]), (0, "false"))

    def test_eq_common_strand_count(self):
        self.assertEqual(run_command(["eq", "r1 r1", ""]), (0, "true"))
        self.assertEqual(run_command(["eq", "s1", "s1 r2 r2"]), (0, "true"))

    def test_crystal_eq(self):
        self.assertEqual(run_command(["crystal-eq", "s1 s2 s1", "s2 s1 s2"]), (0, "true"))
        self.assertEqual(run_command(["crystal-eq", "s1 s1", ""]), (0, "false"))


class TestReports(unittest.TestCase):
    def test_check_relations(self):
        code, text = run_command(["check-relations", "--n", "3", "--json"])
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(text)["all_passed"])

    def test_check_relations_table(self):
        code, text = run_command(["check-relations", "--n", "4"])
        self.assertEqual(code, 0)
        self.assertIn("0 failures", text)


class TestExitCodes(unittest.TestCase):
    def test_parse_error(self):
        self.assertEqual(run_command(["nf", "s1 x2"]), (2, ""))
        self.assertEqual(run_command(["nf", "s3", "--n", "3"]), (2, ""))

    def test_usage_error(self):
        self.assertEqual(run_command(["frobnicate"])[0], 2)
        self.assertEqual(run_command(["check-relations"])[0], 2)

    def test_strand_count_must_be_positive(self):
        self.assertEqual(run_command(["nf", "", "--n", "0"]), (2, ""))
        self.assertEqual(run_command(["order", "s1", "--n", "-1"]), (2, ""))
        self.assertEqual(run_command(["nf", "s1", "--n", "two"]), (2, ""))
        self.assertEqual(run_command(["check-relations", "--n", "0"]), (2, ""))

    def test_precondition_violation(self):
        self.assertEqual(run_command(["conjugate-to-perm", "s1"]), (3, ""))
        self.assertEqual(run_command(["crystal-eq", "r1", "s1"]), (3, ""))
        self.assertEqual(run_command(["check-relations", "--n", "1"]), (3, ""))


if __name__ == "__main__":
    unittest.main()
