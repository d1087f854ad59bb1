"""Stateless HTTP+JSON facade over the library.

Every response body is produced by the same canonical serializer the CLI
uses, so CLI JSON and API JSON for the same object are byte-identical.
Non-2xx responses always carry {status, code, message}.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import octonion, plane, poemform
from .field import UnsupportedOrder
from .forms import default_forms
from .serialize import canonical_json


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _json_response(doc, status: int = 200) -> Response:
    return Response(
        content=canonical_json(doc),
        status_code=status,
        media_type="application/json",
    )


def create_app(forms: dict[str, poemform.FormPattern] | None = None) -> FastAPI:
    patterns = forms if forms is not None else default_forms()
    app = FastAPI(title="planepoem", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError) -> Response:
        return _json_response(
            {"status": exc.status, "code": exc.code, "message": exc.message},
            status=exc.status,
        )

    def get_pattern(name: str) -> poemform.FormPattern:
        if name not in patterns:
            raise ApiError(404, "unknown_form", f"no form named {name!r}")
        return patterns[name]

    async def read_json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception as exc:
            raise ApiError(400, "bad_json", f"request body is not valid JSON: {exc}") from exc
        if not isinstance(body, dict):
            raise ApiError(400, "bad_json", "request body must be a JSON object")
        return body

    @app.get("/api/forms")
    async def list_forms() -> Response:
        return _json_response(
            {
                "forms": [
                    {
                        "name": p.name,
                        "point_count": p.point_count,
                        "stanza_shape": f"{len(p.stanzas)}x{len(p.stanzas[0])}",
                    }
                    for p in patterns.values()
                ]
            }
        )

    @app.post("/api/scaffold")
    async def scaffold_poem(request: Request) -> Response:
        body = await read_json_body(request)
        pattern = get_pattern(str(body.get("form")))
        base_lines = body.get("base_lines")
        if (
            not isinstance(base_lines, list)
            or len(base_lines) != pattern.point_count
            or any(not isinstance(s, str) or not s.strip() for s in base_lines)
        ):
            raise ApiError(
                400,
                "bad_base_lines",
                f"base_lines must be {pattern.point_count} nonempty strings",
            )
        poem = poemform.scaffold(pattern, dict(enumerate(base_lines)))
        classes: list[list[list[int]]] = [[] for _ in range(pattern.point_count)]
        for si, stanza in enumerate(pattern.stanzas):
            for j, pid in enumerate(stanza):
                classes[pid].append([si, j])
        return _json_response(
            {"form": pattern.name, "poem": poemform.render_poem(poem), "classes": classes}
        )

    @app.post("/api/validate")
    async def validate_poem(request: Request) -> Response:
        body = await read_json_body(request)
        pattern = get_pattern(str(body.get("form")))
        mode = body.get("mode")
        if mode not in poemform.MODES:
            raise ApiError(400, "bad_mode", f"mode must be one of {poemform.MODES}")
        threshold = body.get("threshold")
        if threshold is not None and not (
            isinstance(threshold, (int, float)) and 0.0 <= threshold <= 1.0
        ):
            raise ApiError(400, "bad_threshold", "threshold must lie in [0, 1]")
        text = body.get("poem")
        if not isinstance(text, str):
            raise ApiError(400, "bad_poem", "poem must be a string")
        try:
            poem = poemform.parse_poem(text)
        except poemform.EmptyInput as exc:
            raise ApiError(400, "empty_poem", str(exc)) from exc
        report = poemform.validate(poem, pattern, mode=mode, threshold=threshold)
        return _json_response(report.to_doc())

    @app.get("/api/plane/{q}")
    async def get_plane(q: int) -> Response:
        try:
            structure = plane.build_field_plane(q)
        except UnsupportedOrder as exc:
            raise ApiError(404, "unsupported_order", str(exc)) from exc
        return _json_response(plane.to_doc(structure))

    @app.get("/api/octonion/table")
    async def get_octonion_table() -> Response:
        table = octonion.build_table(octonion.paper_orientation())
        return _json_response(octonion.table_doc(table))

    return app
