"""End-to-end tests of the command line through app.dispatch."""
import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from app import EXIT_CAP, EXIT_ERROR, EXIT_OK, dispatch


class CliTestCase(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.report_dir = os.path.join(self.tmpdir, "reports")
        self.config_path = os.path.join(self.tmpdir, "config.json")
        with open(self.config_path, "w", encoding="utf-8") as f:
            json.dump({"p": 2, "ext": "quadratic", "reportDir": self.report_dir}, f)

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)

    def run_cli(self, *argv):
        """(exit code, stdout) of one invocation."""
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = dispatch(["--config", self.config_path, *argv])
        return code, out.getvalue()


class TestSigmaCommand(CliTestCase):

    def test_sigma_star2_over_f4(self):
        code, out = self.run_cli("sigma", "--which", "s2", "--field", "2,ext", "--quiet", "(x-0)^4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "(x+1)^2*(x+a)^1*(x+1+a)^1")

    def test_default_field_from_config(self):
        code, out = self.run_cli("sigma", "--quiet", "x^2*(x+1)^2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "x^2*(x+1)^2")

    def test_sigma_over_prime_field(self):
        code, out = self.run_cli("sigma", "--which", "s", "--field", "3,prime", "--quiet", "x^2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "(x+2)^2")

    def test_json(self):
        code, out = self.run_cli("sigma", "--field", "3", "--format", "json", "--quiet", "x^4")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["field"], "F9")
        self.assertEqual(data["which"], "s2")
        self.assertEqual(data["result"], "(x+1)^4")

    def test_oracle(self):
        code, out = self.run_cli("oracle", "--field", "2", "--quiet", "x^2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip(), "(x+1)^2")


class TestCheckCommand(CliTestCase):

    def test_sigma_member(self):
        code, out = self.run_cli("check", "--field", "2,ext", "--quiet", "(x-0)^2*(x-1)^2")
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], "bup: true, class: member-of-Sigma")
        self.assertEqual(lines[1], "perfect: false")
        self.assertEqual(lines[2], "unitary-perfect: true")

    def test_decomposition(self):
        code, out = self.run_cli("check", "--field", "2", "--quiet", "x*(x+1)*(x+a)*(x+a+1)")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("class: trivial-bup", out)
        self.assertIn("decomposition: x^1*(x+1)^1 | (x+a)^1*(x+1+a)^1", out)

    def test_not_splitting(self):
        code, _ = self.run_cli("check", "--field", "2,prime", "--quiet", "x^2+x+1")
        self.assertEqual(code, EXIT_ERROR)


class TestBatchCommands(CliTestCase):

    def test_omega(self):
        code, out = self.run_cli("omega", "--p", "5", "--raw", "--format", "json", "--quiet")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["omega"], [1, 2, 3, 4, 5, 24])
        self.assertEqual(data["raw"], {"omega2": [5], "omega3": [4], "omega4": [24]})

    def test_omega_defaults_to_json(self):
        code, out = self.run_cli("omega", "--p", "5", "--quiet")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["omega1"], [1, 2, 3])
        self.assertEqual(data["omega2"], [5])
        self.assertEqual(data["omega3"], [4])
        self.assertEqual(data["omega4"], [24])
        code, out = self.run_cli("omega", "--p", "5", "--format", "text", "--quiet")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("omega1: [1, 2, 3]", out)

    def test_search(self):
        code, out = self.run_cli("search-f4", "--bound", "2", "--format", "json", "--quiet")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)["hits"]), 8)

    def test_verify_splitbup(self):
        code, out = self.run_cli("verify-splitbup", "--p", "3", "--rmax", "4", "--quiet")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("b.u.p. for r in [1, 2, 3]", out)

    def test_save(self):
        code, _ = self.run_cli("omega", "--p", "3", "--save", "--quiet")
        self.assertEqual(code, EXIT_OK)
        saved = os.listdir(self.report_dir)
        self.assertEqual(len(saved), 1)
        self.assertTrue(saved[0].startswith("omega_"))


class TestExitCodes(CliTestCase):

    def test_input_errors(self):
        cases = [
            ("sigma", "--quiet", "x+y"),
            ("sigma", "--field", "4", "--quiet", "x"),
            ("omega", "--p", "2", "--quiet"),
            ("omega", "--quiet"),
            ("search-f4", "--filter", "all-odd,not-all-odd", "--quiet"),
            ("no-such-command",),
            (),
        ]
        for argv in cases:
            code, _ = self.run_cli(*argv)
            self.assertEqual(code, EXIT_ERROR, argv)

    def test_cap_exceeded(self):
        code, _ = self.run_cli("verify-beard", "--p", "3", "--rmax", "30", "--quiet")
        self.assertEqual(code, EXIT_CAP)
        code, _ = self.run_cli("oracle", "--field", "2", "--degree-cap", "3", "--quiet", "x^4")
        self.assertEqual(code, EXIT_CAP)

    def test_oracle_divisor_cap(self):
        # 49 distinct roots: 2^49 divisors, under the degree cap
        code, _ = self.run_cli("oracle", "--field", "7", "--quiet", "x^49-x")
        self.assertEqual(code, EXIT_CAP)
        code, _ = self.run_cli("oracle", "--field", "2", "--divisor-cap", "4", "--quiet", "x^4")
        self.assertEqual(code, EXIT_CAP)
        code, out = self.run_cli("oracle", "--field", "2", "--divisor-cap", "5", "--quiet", "x^4")
        self.assertEqual(code, EXIT_OK)

    def test_bad_config(self):
        with open(self.config_path, "w", encoding="utf-8") as f:
            f.write("{not json")
        code, _ = self.run_cli("omega", "--p", "3", "--quiet")
        self.assertEqual(code, EXIT_ERROR)


if __name__ == "__main__":
    unittest.main()
