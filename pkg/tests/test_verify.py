import json
import os
import unittest
from unittest import mock

from tests._helpers import run_cli, shapes_upto
from yaspe.torus import TorusShape, VerificationReport
from yaspe.verify import (
    CHECKS,
    DEFAULT_CHECKS,
    Check,
    Report,
    SweepRunner,
    SweepSpec,
    default_jobs,
    get_check,
)


class BrokenCheck(Check):
    name = "broken"

    def run(self) -> VerificationReport:
        return self.failed(detail="always fails", value=1)


class RaisingCheck(Check):
    name = "raising"

    def run(self) -> VerificationReport:
        if self.shape == TorusShape(m=3, n=2):
            raise RuntimeError("outer vertex count drifted")
        if self.shape == TorusShape(m=2, n=3):
            raise ValueError("bad path")
        return self.passed()


class ChecksTestCase(unittest.TestCase):
    def _sweep(self, name, max_sum, max_part=0):
        cls = get_check(name)
        for shape in shapes_upto(max_sum, max_part):
            if not cls.applies_to(shape):
                continue
            with self.subTest(check=name, shape=shape):
                report = cls(shape=shape).run()
                self.assertTrue(report.passed, report.to_dict())
                self.assertEqual(report.check, name)

    def test_lemma_suites(self):
        for name in ["lemma1", "lemma2", "count", "mfw", "extraction", "kalman"]:
            self._sweep(name, 14)

    def test_bijection(self):
        self._sweep("bijection", 12)

    def test_symmetry(self):
        self._sweep("symmetry", 12)

    def test_skein(self):
        self._sweep("skein", 13)
        self.assertFalse(get_check("skein").applies_to(TorusShape(m=2, n=3)))

    def test_registry(self):
        self.assertEqual(set(DEFAULT_CHECKS) | {"skein", "symmetry"}, set(CHECKS))
        with self.assertRaises(ValueError):
            get_check("nope")

    def test_failure_witness(self):
        with self.assertLogs("yaspe.verify.check", level="WARNING"):
            report = BrokenCheck(shape=TorusShape(m=3, n=2)).run()
        self.assertFalse(report)
        self.assertEqual(
            report.to_dict(),
            {
                "m": 3,
                "n": 2,
                "check": "broken",
                "pass": False,
                "witness": {"shape": [3, 2], "value": 1},
                "detail": "always fails",
            },
        )


class SweepTestCase(unittest.TestCase):
    def test_spec_validation(self):
        with self.assertRaises(ValueError):
            SweepSpec(max_sum=2)
        with self.assertRaises(ValueError):
            SweepSpec(max_sum=5, checks=[])
        with self.assertRaises(ValueError):
            SweepSpec.parse(5, "lemma1,nope")
        self.assertEqual(SweepSpec.parse(5, "lemma1, lemma2").checks, ["lemma1", "lemma2"])
        self.assertEqual(SweepSpec(max_sum=5).checks, DEFAULT_CHECKS)
        self.assertEqual(len(SweepSpec(max_sum=16).shapes()), 79)

    def test_repeated_checks(self):
        spec = SweepSpec.parse(5, "lemma1,count,lemma1")
        self.assertEqual(spec.checks, ["lemma1", "count"])
        report = SweepRunner(spec=spec, jobs=1).run()
        self.assertEqual(list(report.summary.index), ["lemma1", "count"])
        json.dumps(report.to_dict())

    def test_raising_check(self):
        with mock.patch.dict(CHECKS, {"raising": RaisingCheck}):
            spec = SweepSpec(max_sum=5, checks=["raising"])
            with self.assertLogs("yaspe", level="WARNING"):
                report = SweepRunner(spec=spec, jobs=1).run()
        self.assertEqual(len(report.results), len(spec.shapes()))
        self.assertEqual(
            [r.witness for r in report.failures],
            [
                {"shape": [3, 2], "error": "RuntimeError"},
                {"shape": [2, 3], "error": "ValueError"},
            ],
        )
        self.assertEqual(report.failures[0].detail, "outer vertex count drifted")

    def test_default_jobs(self):
        with mock.patch.dict(os.environ, {"YASPE_JOBS": "3"}):
            self.assertEqual(default_jobs(), 3)
        with mock.patch.dict(os.environ, {"YASPE_JOBS": "three"}):
            with self.assertRaises(ValueError):
                default_jobs()
        with mock.patch.dict(os.environ, {"YASPE_JOBS": "0"}):
            with self.assertRaises(ValueError):
                default_jobs()
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(default_jobs(), 1)

    def test_run(self):
        spec = SweepSpec(max_sum=6, checks=["full_twist", "skein"])
        seen = []
        report = SweepRunner(spec=spec, jobs=1, on_result=seen.append).run()

        self.assertTrue(report.passed)
        self.assertEqual(seen, report.results)
        self.assertEqual(
            [(r.m, r.n, r.check) for r in report.results[:4]],
            [(1, 1, "full_twist"), (2, 1, "full_twist"), (1, 2, "full_twist"), (1, 2, "skein")],
        )
        summary = report.summary
        self.assertEqual(list(summary.index), ["full_twist", "skein"])
        self.assertEqual(summary.loc["full_twist", "shapes"], len(spec.shapes()))
        self.assertEqual(summary.loc["skein", "failed"], 0)

        record = report.to_dict()
        self.assertEqual(record["maxSum"], 6)
        self.assertTrue(record["pass"])
        self.assertEqual(record["summary"]["skein"]["passed"], summary.loc["skein", "passed"])
        json.dumps(record)

    def test_parallel_order(self):
        spec = SweepSpec(max_sum=7, checks=["lemma1", "full_twist"])
        serial = SweepRunner(spec=spec, jobs=1).run()
        parallel = SweepRunner(spec=spec, jobs=2).run()
        self.assertEqual(
            [r.to_dict() for r in serial.results],
            [r.to_dict() for r in parallel.results],
        )

    def test_failed_report(self):
        spec = SweepSpec(max_sum=3, checks=["count"])
        with self.assertLogs("yaspe.verify.check", level="WARNING"):
            failure = BrokenCheck(shape=TorusShape(m=2, n=1)).run()
        report = Report(spec=spec, results=[failure])
        self.assertFalse(report.passed)
        self.assertEqual(report.failures, [failure])
        self.assertEqual(report.frame["pass"].tolist(), [False])


class CliTestCase(unittest.TestCase):
    def test_paths(self):
        code, out = run_cli("paths", "3", "2")
        self.assertEqual(code, 0)
        self.assertEqual(
            [json.loads(line)["steps"] for line in out.splitlines()], ["VVHHH", "VHVHH"]
        )
        self.assertEqual(run_cli("paths", "5", "4", "--count"), (0, "14\n"))
        self.assertEqual(run_cli("paths", "2", "3", "--rugged", "--count"), (0, "0\n"))
        self.assertEqual(run_cli("paths", "2", "4")[0], 2)

    def test_paths_stats(self):
        code, out = run_cli("paths", "5", "4", "--stats")
        self.assertEqual(code, 0)
        self.assertIn(
            '{"m":5,"n":4,"steps":"VVHVHHVHH","area":2,"h":4,"p0":[1,3],'
            '"V":[{"p":[0,2],"k":1},{"p":[3,4],"k":2}],"rugged":false}',
            out.splitlines(),
        )

    def test_superpoly(self):
        self.assertEqual(
            run_cli("superpoly", "3", "2", "--format", "text"),
            (0, "Q^2*T^-2*a^2 + Q^-2*a^2 + T^-3*a^4\n"),
        )
        self.assertEqual(
            run_cli("superpoly", "3", "2", "--specialize", "T=-1,a=1"),
            (0, "Q^2 - 1 + Q^-2\n"),
        )
        self.assertEqual(run_cli("superpoly", "1", "2"), (0, "1\n"))
        self.assertEqual(run_cli("superpoly", "3", "2", "--minus"), (0, "Q^2*T^-2 + Q^-2\n"))
        self.assertEqual(run_cli("superpoly", "3", "2", "--plus"), (0, "T^-3\n"))
        self.assertEqual(run_cli("superpoly", "3", "2", "--primed"), (0, "t' - a' + q'\n"))
        self.assertEqual(
            run_cli("superpoly", "3", "2", "--format", "latex"),
            (0, "Q^{2}T^{-2}\\alpha^{2} + Q^{-2}\\alpha^{2} + T^{-3}\\alpha^{4}\n"),
        )

    def test_superpoly_machine_formats(self):
        code, out = run_cli("superpoly", "3", "2", "--format", "json")
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertEqual((record["pathCount"], record["ruggedCount"]), (2, 1))
        self.assertEqual(record["part"], "full")
        code, out = run_cli("superpoly", "3", "2", "--plus", "--format", "json")
        self.assertEqual(json.loads(out)["part"], "plus")
        self.assertEqual(len(record["terms"]), 3)

        code, out = run_cli("superpoly", "3", "2", "--format", "csv")
        self.assertEqual(out.splitlines()[0], "dQ,dAlpha,dT,c")
        self.assertEqual(len(out.splitlines()), 4)

    def test_superpoly_errors(self):
        self.assertEqual(run_cli("superpoly", "4", "2")[0], 2)
        self.assertEqual(run_cli("superpoly", "3", "2", "--specialize", "T=x")[0], 3)
        self.assertEqual(run_cli("superpoly", "3", "2", "--specialize", "T=2")[0], 3)
        with self.assertRaises(SystemExit) as cm:
            run_cli("superpoly", "3", "2", "--primed", "--minus")
        self.assertEqual(cm.exception.code, 2)
        for fmt in ["latex", "csv"]:
            with self.subTest(fmt=fmt):
                with self.assertRaises(SystemExit) as cm:
                    run_cli("superpoly", "3", "2", "--primed", "--format", fmt)
                self.assertEqual(cm.exception.code, 2)

    def test_verify(self):
        code, out = run_cli("verify", "--max-sum", "10", "--checks", "full_twist")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("PASS full_twist (1, 1)"))

        code, out = run_cli(
            "verify", "--max-sum", "8", "--checks", "alexander,kalman,extraction,mfw,count",
            "--format", "json",
        )
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertTrue(record["pass"])
        self.assertNotIn("wallTime", record)

        self.assertEqual(run_cli("verify", "--max-sum", "8", "--checks", "nope")[0], 2)
        self.assertEqual(run_cli("verify", "--max-sum", "2")[0], 2)

    def test_verify_failure_exit(self):
        with mock.patch.dict(CHECKS, {"broken": BrokenCheck}):
            with self.assertLogs("yaspe.verify.check", level="WARNING"):
                code, out = run_cli("verify", "--max-sum", "3", "--checks", "broken")
        self.assertEqual(code, 1)
        self.assertIn('FAIL broken (1, 1) always fails {"shape":[1,1],"value":1}', out)

    def test_verify_raising_check_exit(self):
        with mock.patch.dict(CHECKS, {"raising": RaisingCheck}):
            with self.assertLogs("yaspe", level="WARNING"):
                code, out = run_cli("verify", "--max-sum", "6", "--checks", "raising")
        self.assertEqual(code, 1)
        lines = out.splitlines()
        self.assertIn(
            'FAIL raising (3, 2) outer vertex count drifted {"shape":[3,2],"error":"RuntimeError"}',
            lines,
        )
        self.assertIn(
            'FAIL raising (2, 3) bad path {"shape":[2,3],"error":"ValueError"}', lines
        )

    def test_verify_repeated_checks_json(self):
        code, out = run_cli(
            "verify", "--max-sum", "5", "--checks", "lemma1,lemma1", "--format", "json"
        )
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertEqual(record["checks"], ["lemma1"])
        self.assertEqual(list(record["summary"]), ["lemma1"])

    def test_table(self):
        code, out = run_cli("table", "--max-sum", "5", "--format", "csv")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(
            lines[0], "m,n,paths,rugged,alpha_min,alpha_max,terms,full_twist"
        )
        self.assertIn("3,2,2,1,2,4,3,True", lines)
        self.assertEqual(len(lines), 10)

    def test_deterministic(self):
        for argv in [("paths", "5", "3", "--stats"), ("superpoly", "7", "4", "--format", "json")]:
            with self.subTest(argv=argv):
                self.assertEqual(run_cli(*argv), run_cli(*argv))


if __name__ == "__main__":
    unittest.main()
