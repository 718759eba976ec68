"""
Tests for the Kummer-type K3 Verification API

Run with: pytest tests/ -v
"""

import importlib
import warnings

import pytest
from fastapi.testclient import TestClient
from pydantic.warnings import PydanticDeprecatedSince20

import main
from main import app

client = TestClient(app)


class TestHealthEndpoints:
    """Test basic health and info endpoints"""

    def test_root_endpoint(self):
        """Test root health check"""
        response = client.get("/")
        assert response.status_code == 200
        data = response.json()
        assert data["status"] == "healthy"
        assert "service" in data

    def test_get_suites(self):
        """Test listing the suites and their checks"""
        response = client.get("/api/suites")
        assert response.status_code == 200
        suites = response.json()["suites"]
        assert set(suites) == {"weddle", "segre", "congruence", "configs", "lattice"}
        ids = [c["check_id"] for c in suites["lattice"]]
        assert "lattice.shioda_tate" in ids
        assert all(c["anchor"] for c in suites["configs"])

    def test_get_config(self):
        """Test the runner defaults are exposed"""
        response = client.get("/api/config")
        assert response.status_code == 200
        data = response.json()
        assert data["constraints"]["max_enum_field_degree"] == 6
        assert "enum_field" in data["fields"]


class TestRunSuiteEndpoint:
    """Test suite execution endpoint"""

    def test_lattice_suite(self):
        """Test the lattice suite passes and reports every check"""
        response = client.post("/api/run_suite", json={"suite": "lattice"})
        assert response.status_code == 200

        data = response.json()
        assert data["suite"] == "lattice"
        assert data["status"] == "pass"
        assert data["counts"]["fail"] == 0
        ids = [c["check_id"] for c in data["checks"]]
        assert ids == sorted(ids)
        assert "lattice.index" in ids

    def test_configs_suite(self):
        """Test the configuration suite passes"""
        response = client.post("/api/run_suite", json={"suite": "configs", "seed": 3})
        assert response.status_code == 200
        data = response.json()
        assert data["seed"] == 3
        assert data["status"] == "pass"
        for record in data["checks"]:
            assert record["status"] == "pass"

    def test_unknown_suite(self):
        """Test an unknown suite name is rejected"""
        response = client.post("/api/run_suite", json={"suite": "quintic"})
        assert response.status_code == 422

    def test_bad_field(self):
        """Test a field string that does not parse"""
        response = client.post("/api/run_suite", json={"suite": "lattice", "field": "3^4"})
        assert response.status_code == 422

    def test_reducible_modulus(self):
        """Test a modulus that is not irreducible"""
        # x^4 + 1 = (x + 1)^4
        response = client.post("/api/run_suite", json={"suite": "lattice", "field": "2^4/0x11"})
        assert response.status_code == 422

    def test_wrong_param_count(self):
        """Test parameter lists of the wrong length"""
        response = client.post("/api/run_suite", json={"suite": "weddle", "params": "2,3,4"})
        assert response.status_code == 422

    def test_params_out_of_field(self):
        """Test parameters too large for the enumeration field are a 400"""
        response = client.post(
            "/api/run_suite",
            json={"suite": "weddle", "field": "2^4", "params": "2,3,4,1ff"},
        )
        assert response.status_code == 400

    def test_samples_out_of_range(self):
        """Test sample counts must be positive"""
        response = client.post("/api/run_suite", json={"suite": "weddle", "samples": 0})
        assert response.status_code == 422

    def test_budget_too_small(self):
        """Test the budget floor"""
        response = client.post("/api/run_suite", json={"suite": "lattice", "budget_ms": 0})
        assert response.status_code == 422

    def test_validators_not_deprecated(self):
        """Test the request model builds without deprecated validator warnings"""
        with warnings.catch_warnings():
            warnings.simplefilter("error", PydanticDeprecatedSince20)
            importlib.reload(main)


class TestDeterminism:
    """Test repeated runs agree"""

    def test_same_seed_same_statuses(self):
        """Test two runs with one seed give identical records"""
        request_data = {"suite": "configs", "seed": 11}
        first = client.post("/api/run_suite", json=request_data).json()
        second = client.post("/api/run_suite", json=request_data).json()
        strip = lambda d: [(c["check_id"], c["status"], c["detail"]) for c in d["checks"]]
        assert strip(first) == strip(second)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
