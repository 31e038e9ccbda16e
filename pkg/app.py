"""
Petri Net Homology API

FastAPI wrapper around the analysis runner.
"""

import json
from typing import Optional

from fastapi import FastAPI, File, HTTPException, Query, UploadFile
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from src.models.analysis_request import AnalysisRequest
from src.models.pipeline_spec import PipelineSpec
from src.runner import AnalysisRunner
from src.utils.constants import (
    EXIT_RESOURCE_CAP,
    LIST_SEPARATOR,
    MAX_NET_DOCUMENT_BYTES,
    MODE_ALL_STATES,
    MODE_REACHABLE,
    OUTPUT_STRUCTURED,
)

app = FastAPI(
    title="Petri Net Homology",
    description="Integral and directed homology of elementary Petri nets",
    version="1.0.0",
)


def _respond(result) -> JSONResponse:
    """Structured record on success or failed checks; HTTP error otherwise."""
    if result.exit_code == EXIT_RESOURCE_CAP:
        raise HTTPException(status_code=413, detail=result.stderr)
    if not result.stdout:
        raise HTTPException(status_code=400, detail=result.stderr)
    return JSONResponse(content=json.loads(result.stdout))


@app.get("/")
async def health_check():
    """Health check endpoint."""
    return {
        "status": "healthy",
        "service": "petri-net-homology",
        "version": "1.0.0",
    }


@app.get("/health")
async def health():
    """Alias for health check."""
    return await health_check()


@app.post("/analyze")
async def analyze(
    file: Optional[UploadFile] = File(None),
    pipeline: Optional[str] = Query(None, description="N[,variant] instead of an uploaded net"),
    run: str = Query("homology", description="comma-separated analyses"),
    all_states: bool = Query(False),
    max_dim: Optional[int] = Query(None, ge=0),
    dump_complex: bool = Query(False),
):
    """
    Analyze an uploaded net file or a generated pipeline.

    Returns the same structured record as `analyze --json`.
    """
    if (file is None) == (pipeline is None):
        raise HTTPException(status_code=400, detail="Upload a net file or pass ?pipeline=, not both")

    document = None
    name = None
    if file is not None:
        content = await file.read(MAX_NET_DOCUMENT_BYTES + 1)
        if len(content) > MAX_NET_DOCUMENT_BYTES:
            raise HTTPException(status_code=413, detail="Net file too large")
        try:
            document = content.decode("utf-8")
        except UnicodeDecodeError:
            raise HTTPException(status_code=400, detail="Net file must be UTF-8 text")
        name = (file.filename or "net").rsplit(".", 1)[0]

    try:
        request = AnalysisRequest(
            net_document=document,
            net_name=name,
            pipeline=PipelineSpec.parse(pipeline) if pipeline else None,
            mode=MODE_ALL_STATES if all_states else MODE_REACHABLE,
            analyses=tuple(a.strip() for a in run.split(LIST_SEPARATOR) if a.strip()),
            max_dim=max_dim,
            output=OUTPUT_STRUCTURED,
            dump_complex=dump_complex,
        )
    except (ValueError, ValidationError) as e:
        raise HTTPException(status_code=400, detail=str(e))

    return _respond(AnalysisRunner().run(request))


@app.get("/verify")
async def verify(n_max: int = Query(..., ge=2)):
    """Run the pipeline theorem verifier for n = 2..n_max."""
    return _respond(AnalysisRunner().run_verify(n_max, OUTPUT_STRUCTURED))


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
