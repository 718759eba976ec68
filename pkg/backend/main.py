import sys
import os
import logging
import time
from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, field_validator
from typing import List, Optional, Dict

# Add root directory to sys.path to import core modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.config import DEFAULT_BUDGET_MS, DEFAULT_SEED, LOG_FORMAT, MAX_SAMPLES, MIN_BUDGET_MS, get_config_summary
from core.errors import ModulusError
from core.gf2k import FieldSpec
from core.suites import SUITE_NAMES, SuiteOptions, catalogue, run

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format=LOG_FORMAT
)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="Kummer-type K3 Verification API",
    description="REST API for running exact verification suites over GF(2^k)",
    version="1.0.0"
)

# Configure CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:5173", "http://localhost:3000"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class SuiteRequest(BaseModel):
    """Request model for the suite endpoint"""
    suite: str
    field: Optional[str] = None
    params: Optional[str] = None
    samples: Optional[int] = None
    seed: int = DEFAULT_SEED
    budget_ms: int = DEFAULT_BUDGET_MS

    @field_validator('suite')
    @classmethod
    def validate_suite(cls, v):
        if v not in SUITE_NAMES + ("all",):
            raise ValueError(f'Suite must be one of {list(SUITE_NAMES) + ["all"]}')
        return v

    @field_validator('field')
    @classmethod
    def validate_field(cls, v):
        if v is None:
            return v
        try:
            FieldSpec.parse(v)
        except ModulusError as e:
            raise ValueError(str(e))
        return v

    @field_validator('params')
    @classmethod
    def validate_params(cls, v):
        if v is None:
            return v
        parts = v.split(",")
        if len(parts) not in (4, 12):
            raise ValueError('Params must be 4 (Weddle) or 12 (congruence) hex values')
        try:
            [int(p, 16) for p in parts]
        except ValueError:
            raise ValueError('Params must be hexadecimal')
        return v

    @field_validator('samples')
    @classmethod
    def validate_samples(cls, v):
        if v is not None and not 1 <= v <= MAX_SAMPLES:
            raise ValueError(f'Samples must be in [1, {MAX_SAMPLES}]')
        return v

    @field_validator('budget_ms')
    @classmethod
    def validate_budget(cls, v):
        if v < MIN_BUDGET_MS:
            raise ValueError(f'Budget must be >= {MIN_BUDGET_MS} ms')
        return v


class CheckResult(BaseModel):
    """One check of a suite"""
    check_id: str
    anchor: str
    status: str
    detail: str
    elapsed_ms: float


class SuiteResponse(BaseModel):
    """Response model for the suite endpoint"""
    suite: str
    field: str
    seed: int
    status: str
    counts: Dict[str, int]
    checks: List[CheckResult]


@app.get("/")
def root():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "service": "Kummer-type K3 Verification API",
        "version": "1.0.0"
    }


@app.get("/api/suites")
def get_suites():
    """
    List the suites and their checks.

    Returns:
        dict: JSON object with 'suites' mapping each suite to its checks
    """
    logger.info("Listing verification suites")
    return {"suites": catalogue()}


@app.get("/api/config")
def get_config():
    """Default fields, sample counts and limits used by the runner"""
    return get_config_summary()


@app.post("/api/run_suite", response_model=SuiteResponse)
def run_suite(req: SuiteRequest):
    """
    Run a verification suite.

    Args:
        req: SuiteRequest with the suite name and runner options

    Returns:
        SuiteResponse with one record per check

    Raises:
        HTTPException: 400 for options the runner rejects, 500 for processing errors
    """
    start_time = time.time()
    logger.info(f"Suite requested: {req.suite}, field={req.field}, seed={req.seed}, samples={req.samples}")

    try:
        options = SuiteOptions.build(
            field=req.field,
            seed=req.seed,
            samples=req.samples,
            params=req.params,
            budget_ms=req.budget_ms,
        )
    except ValueError as e:
        logger.error(f"Rejected options: {e}")
        raise HTTPException(status_code=400, detail=str(e))

    try:
        report = run(req.suite, options)
        elapsed = time.time() - start_time
        logger.info(f"Suite {req.suite} finished with {report.status} in {elapsed:.2f}s")
        return SuiteResponse(**report.to_dict())
    except Exception as e:
        logger.error(f"Suite run failed: {str(e)}", exc_info=True)
        raise HTTPException(status_code=500, detail=f"Suite processing error: {str(e)}")


if __name__ == "__main__":
    import uvicorn
    logger.info("Starting FastAPI server")
    uvicorn.run(app, host="0.0.0.0", port=8000)
