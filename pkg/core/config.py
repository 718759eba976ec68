"""
Configuration module for the Kummer-type K3 verification toolkit

This module centralizes all default parameters and configuration values
used by the verification suites, the command-line runner and the backend API.

Environment Variables (optional overrides):
    KUMMER2_ENUM_FIELD: Field for enumeration-heavy suites ("2^k" or "2^k/0xMOD")
    KUMMER2_SAMPLE_FIELD: Field for sampling-heavy identity checks
    KUMMER2_SEED: Default seed for the pseudo-random generator
    KUMMER2_BUDGET_MS: Wall-clock budget per suite in milliseconds
    KUMMER2_KUMMER_TRIALS: Parameter-search cap for the rational Kummer configuration
    KUMMER2_CLOSURE_CAP: Cap for matrix group closure enumeration
    KUMMER2_LOG_LEVEL: Logging level
"""

import os
from pathlib import Path

# Paths
PROJECT_ROOT = Path(__file__).parent.parent

# Fields
ENUM_FIELD = os.getenv("KUMMER2_ENUM_FIELD", "2^4")
SAMPLE_FIELD = os.getenv("KUMMER2_SAMPLE_FIELD", "2^8")

# Runner
DEFAULT_SEED = int(os.getenv("KUMMER2_SEED", "0"))
DEFAULT_BUDGET_MS = int(os.getenv("KUMMER2_BUDGET_MS", "600000"))
KUMMER_TRIALS = int(os.getenv("KUMMER2_KUMMER_TRIALS", "200"))
CLOSURE_CAP = int(os.getenv("KUMMER2_CLOSURE_CAP", "100000"))

# Sample counts per check
DOUBLE_PLANE_SAMPLES = 1000
TEN_CONICS_SAMPLES = 100
POLAR_SAMPLES = 25
CONGRUENCE_PARAM_SETS = 5
CONGRUENCE_PROBES = 50
CONGRUENCE_MIN_GENERIC = 45  # of CONGRUENCE_PROBES
LINE_SCAN_SAMPLES = 1000
WEDDLE_SAMPLES = 10

# Validation Constraints
MIN_FIELD_DEGREE = 1
MAX_FIELD_DEGREE = 32  # one machine word per element
MAX_ENUM_FIELD_DEGREE = 6  # brute-force scans refuse larger fields
MAX_SAMPLES = 100000
MIN_BUDGET_MS = 1

# Exp/log tables are built only up to this degree
TABLE_FIELD_DEGREE = 12

# Logging
LOG_LEVEL = os.getenv("KUMMER2_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

def get_config_summary() -> dict:
    """
    Get a summary of current configuration.

    Returns:
        dict: Configuration parameters
    """
    return {
        "fields": {
            "enum_field": ENUM_FIELD,
            "sample_field": SAMPLE_FIELD,
        },
        "runner": {
            "seed": DEFAULT_SEED,
            "budget_ms": DEFAULT_BUDGET_MS,
            "kummer_trials": KUMMER_TRIALS,
            "closure_cap": CLOSURE_CAP,
        },
        "samples": {
            "double_plane": DOUBLE_PLANE_SAMPLES,
            "ten_conics": TEN_CONICS_SAMPLES,
            "polar": POLAR_SAMPLES,
            "congruence_param_sets": CONGRUENCE_PARAM_SETS,
            "congruence_probes": CONGRUENCE_PROBES,
            "line_scan": LINE_SCAN_SAMPLES,
            "weddle": WEDDLE_SAMPLES,
        },
        "constraints": {
            "min_field_degree": MIN_FIELD_DEGREE,
            "max_field_degree": MAX_FIELD_DEGREE,
            "max_enum_field_degree": MAX_ENUM_FIELD_DEGREE,
            "max_samples": MAX_SAMPLES,
        }
    }

if __name__ == "__main__":
    import json
    print("Current Configuration:")
    print(json.dumps(get_config_summary(), indent=2))
