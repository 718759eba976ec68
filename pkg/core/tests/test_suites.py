"""
Tests for the suite runner, its reports and the command line
"""

import json
import time

import pytest

import run_suites
from core.errors import CheckSkipped, InconclusiveSample, VerificationFailure
from core.report import CheckRecord, SuiteReport, merge_reports
from core.suites import CHECKS, SUITE_NAMES, Check, SuiteContext, SuiteOptions, catalogue, run, run_check


def raising(exc):
    def func(ctx):
        raise exc
    return func


class TestOptions:
    """Test option validation"""

    def test_defaults(self):
        """Test the default enumeration and sampling fields"""
        options = SuiteOptions.build()
        assert options.enum_field.k == 4
        assert options.sample_field.k == 8

    def test_field_override(self):
        """Test one field replaces both defaults"""
        options = SuiteOptions.build(field="2^3")
        assert options.enum_field == options.sample_field
        assert options.describe() == "2^3/0xb,2^3/0xb"

    @pytest.mark.parametrize("kwargs", [
        {"field": "2^4/0x11"},
        {"samples": 0},
        {"budget_ms": 0},
        {"params": "1,2,3"},
        {"params": "1,2,3,zz"},
        {"params": "1,2,3,ff", "field": "2^4"},
    ])
    def test_invalid(self, kwargs):
        """Test every invalid option raises ValueError"""
        with pytest.raises(ValueError):
            SuiteOptions.build(**kwargs)

    def test_params(self):
        """Test hexadecimal parameters are parsed"""
        assert SuiteOptions.build(params="1,2,4,8").params == (1, 2, 4, 8)

    def test_rng_per_check(self):
        """Test generators depend on the check id and replay per seed"""
        ctx = SuiteContext(SuiteOptions.build(seed=5))
        a = ctx.rng("weddle.nodes").integers(0, 1 << 30)
        b = ctx.rng("weddle.nodes").integers(0, 1 << 30)
        c = ctx.rng("weddle.curves").integers(0, 1 << 30)
        assert a == b
        assert a != c


class TestRunCheck:
    """Test how outcomes map to statuses"""

    @pytest.mark.parametrize("exc,status", [
        (VerificationFailure("no"), "fail"),
        (InconclusiveSample("maybe"), "inconclusive"),
        (CheckSkipped("later"), "skip"),
        (KeyError("boom"), "fail"),
    ])
    def test_exception_mapping(self, exc, status):
        """Test each exception type gives its status"""
        ctx = SuiteContext(SuiteOptions.build())
        record = run_check(ctx, Check("lattice", "lattice.probe", "anchor", raising(exc)))
        assert record.status == status
        assert record.check_id == "lattice.probe"

    def test_pass(self):
        """Test a returning check passes with its detail"""
        ctx = SuiteContext(SuiteOptions.build())
        record = run_check(ctx, Check("lattice", "lattice.probe", "anchor", lambda ctx: "fine"))
        assert record.status == "pass"
        assert record.detail == "fine"

    def test_large_field_skips_scans(self):
        """Test exhaustive checks skip over large enumeration fields"""
        ctx = SuiteContext(SuiteOptions.build(field="2^10"))
        with pytest.raises(CheckSkipped):
            ctx.require_enumerable()


class TestRun:
    """Test whole suites"""

    def test_lattice_suite(self):
        """Test the lattice suite passes"""
        report = run("lattice", SuiteOptions.build())
        assert report.status == "pass"
        assert report.exit_code == 0
        assert len(report.records) == len(CHECKS["lattice"])

    def test_configs_suite(self):
        """Test the configuration suite passes"""
        assert run("configs", SuiteOptions.build()).status == "pass"

    def test_congruence_suite_runs(self):
        """Test no congruence check crashes with an unexpected exception"""
        report = run("congruence", SuiteOptions.build(samples=5))
        crashed = [r.check_id for r in report.records if r.detail.startswith(("ValueError", "TypeError"))]
        assert not crashed

    def test_unknown_suite(self):
        """Test an unknown suite name is rejected"""
        with pytest.raises(ValueError):
            run("quintic", SuiteOptions.build())

    def test_budget(self, monkeypatch):
        """Test checks after the budget is spent are skipped"""
        def slow(ctx):
            time.sleep(0.05)
            return "slow"
        checks = [Check("lattice", f"lattice.slow{i}", "anchor", slow) for i in range(3)]
        monkeypatch.setitem(CHECKS, "lattice", checks)
        report = run("lattice", SuiteOptions.build(budget_ms=10))
        statuses = [r.status for r in report.records]
        assert statuses[0] == "pass"
        assert statuses[1:] == ["skip", "skip"]
        assert report.status == "incomplete"
        assert report.exit_code == 0

    def test_failure_exit_code(self, monkeypatch):
        """Test one failed check fails the suite"""
        checks = [Check("lattice", "lattice.bad", "anchor", raising(VerificationFailure("bad")))]
        monkeypatch.setitem(CHECKS, "lattice", checks)
        report = run("lattice", SuiteOptions.build())
        assert report.status == "fail"
        assert report.exit_code == 1

    def test_catalogue(self):
        """Test every suite lists its checks with anchors"""
        listing = catalogue()
        assert tuple(listing) == SUITE_NAMES
        ids = [c["check_id"] for checks in listing.values() for c in checks]
        assert len(ids) == len(set(ids))
        assert all(c["check_id"].startswith(name + ".") for name, checks in listing.items() for c in checks)


class TestReport:
    """Test records and report serialisation"""

    def test_unknown_status(self):
        """Test statuses are validated"""
        with pytest.raises(ValueError):
            CheckRecord("x.y", "anchor", "maybe")

    def test_sorted_json(self):
        """Test records are sorted by id and timing can be dropped"""
        report = SuiteReport("lattice", "2^4/0x13", 0)
        report.add(CheckRecord("lattice.b", "b", "pass", "", 1.5))
        report.add(CheckRecord("lattice.a", "a", "skip", "", 0.5))
        data = json.loads(report.to_json(with_timing=False))
        assert [c["check_id"] for c in data["checks"]] == ["lattice.a", "lattice.b"]
        assert "elapsed_ms" not in data["checks"][0]
        assert data["counts"] == {"pass": 1, "fail": 0, "skip": 1, "inconclusive": 0}
        assert data["status"] == "incomplete"

    def test_empty_report(self):
        """Test an empty report is incomplete"""
        report = SuiteReport("lattice", "2^4/0x13", 0)
        assert report.status == "incomplete"
        assert report.counts()["pass"] == 0

    def test_merge(self):
        """Test merged status follows the worst suite"""
        good = SuiteReport("a", "f", 0, [CheckRecord("a.x", "", "pass")])
        bad = SuiteReport("b", "f", 0, [CheckRecord("b.x", "", "fail")])
        assert merge_reports([good, good])["status"] == "pass"
        assert merge_reports([good, bad])["status"] == "fail"


class TestCommandLine:
    """Test the run_suites entry point"""

    def test_json_output(self, tmp_path):
        """Test a passing suite exits 0 and writes its report"""
        out = tmp_path / "report.json"
        code = run_suites.main(["--suite", "lattice", "--json", str(out), "--quiet"])
        assert code == 0
        data = json.loads(out.read_text())
        assert data["suite"] == "lattice"
        assert data["status"] == "pass"

    def test_bad_field(self):
        """Test an invalid field is a usage error"""
        with pytest.raises(SystemExit) as exc:
            run_suites.main(["--suite", "lattice", "--field", "2^4/0x11"])
        assert exc.value.code == 2

    def test_bad_suite(self):
        """Test an unknown suite is a usage error"""
        with pytest.raises(SystemExit) as exc:
            run_suites.main(["--suite", "quintic"])
        assert exc.value.code == 2

    def test_deterministic(self, tmp_path):
        """Test two runs with one seed write identical reports apart from timing"""
        reports = []
        for name in ("a.json", "b.json"):
            out = tmp_path / name
            run_suites.main(["--suite", "configs", "--seed", "9", "--json", str(out), "--quiet"])
            data = json.loads(out.read_text())
            reports.append([(c["check_id"], c["status"], c["detail"]) for c in data["checks"]])
        assert reports[0] == reports[1]
