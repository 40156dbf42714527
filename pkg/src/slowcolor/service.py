"""JSON-over-HTTP facade for live human-vs-engine play.

POST /api/sessions, GET /api/sessions/{id}, POST /api/sessions/{id}/moves,
GET /api/sessions/{id}/hint. Serves the play UI bundle at / when built.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from fractions import Fraction

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import families, game, solver, strategies
from .connectivity import find_perfect_matching, is_k_connected
from .graph import Graph, GraphError, bits, from_edges, mask_of

ENGINE_CAP = solver.DEFAULT_CAP


class CreateSession(BaseModel):
    graph: str | dict
    human_role: str = "painter"  # "painter" | "lister"
    engine: str = "exact"  # "exact" | "greedy"
    hints: bool = False


class PostMove(BaseModel):
    vertices: list[int]


@dataclass
class Session:
    id: str
    state: game.GameState
    human_role: str
    engine: str
    hints: bool
    pending_mark: int | None = None  # set while Painter must reply
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def graph(self) -> Graph:
        return self.state.graph


def _resolve_graph(spec) -> Graph:
    if isinstance(spec, str):
        return families.builtin(spec)
    return from_edges(spec["n"], spec["edges"], spec.get("labels"))


def _bound_info(g: Graph, score: int) -> dict | None:
    """Theorem comparison for k=1 instances (the service's play scale)."""
    if g.n < 4 or g.n % 2 or not is_k_connected(g, 3):
        return None
    if find_perfect_matching(g) is None:
        return None
    claim = int(Fraction(3 * g.n, 2) + 1)
    return {"claim": claim, "met": score >= claim, "sharp": score == claim}


class SessionStore:
    def __init__(self):
        self.sessions: dict[str, Session] = {}
        self.lock = threading.Lock()

    def add(self, session: Session):
        with self.lock:
            self.sessions[session.id] = session

    def get(self, session_id: str) -> Session:
        with self.lock:
            session = self.sessions.get(session_id)
        if session is None:
            raise HTTPException(404, detail={"error": "unknown-session"})
        return session

    def snapshot_to(self, path: str):
        with self.lock:
            payload = {
                sid: s.state.to_json() for sid, s in self.sessions.items()
            }
        with open(path, "w") as fh:
            json.dump(payload, fh)


def _engine_mark(session: Session) -> int:
    if session.engine == "greedy":
        return session.state.remaining  # mark-all baseline
    return solver.get_solver(session.graph).best_mark(session.state.remaining)


def _engine_reply(session: Session, mark: int) -> int:
    if session.engine == "greedy":
        return strategies.painter_greedy(session.state, mark)
    return solver.get_solver(session.graph).best_reply(session.state.remaining, mark)


def _snapshot(session: Session) -> dict:
    g = session.graph
    s = session.state
    finished = game.is_terminal(s)
    pending = None
    if not finished:
        if session.pending_mark is not None:
            pending = {"role": "painter", "mark": sorted(bits(session.pending_mark))}
        else:
            pending = {"role": "lister"}
    out = {
        "id": session.id,
        "graph": {
            "n": g.n,
            "edges": [list(e) for e in g.edges()],
            "labels": [g.label(v) for v in range(g.n)],
        },
        "human_role": session.human_role,
        "engine": session.engine,
        "hints": session.hints,
        "remaining": sorted(bits(s.remaining)),
        "score": s.score,
        "moves": [m.to_json() for m in s.transcript],
        "pending": pending,
        "finished": finished,
    }
    if finished:
        out["final_score"] = s.score
        out["bound"] = _bound_info(g, s.score)
    return out


def _advance_engine(session: Session):
    """Let the engine act until it is the human's turn (or game over)."""
    s = session.state
    if game.is_terminal(s):
        session.pending_mark = None
        return
    if session.human_role == "painter":
        session.pending_mark = _engine_mark(session)
    else:
        session.pending_mark = None  # human Lister to mark


def create_app() -> FastAPI:
    store = SessionStore()

    @asynccontextmanager
    async def lifespan(_app: FastAPI):
        yield
        path = os.environ.get("SLOWCOLOR_SNAPSHOT")
        if path:
            store.snapshot_to(path)

    app = FastAPI(title="slowcolor game service", lifespan=lifespan)
    app.state.store = store

    @app.exception_handler(GraphError)
    async def graph_error_handler(request, exc):
        return JSONResponse(status_code=422, content={"error": "invalid-input", "detail": str(exc)})

    @app.post("/api/sessions", status_code=201)
    def create_session(req: CreateSession):
        if req.human_role not in ("painter", "lister"):
            raise HTTPException(422, detail={"error": "bad-role"})
        if req.engine not in ("exact", "greedy"):
            raise HTTPException(422, detail={"error": "bad-engine"})
        try:
            g = _resolve_graph(req.graph)
        except (GraphError, KeyError, TypeError) as exc:
            raise HTTPException(422, detail={"error": "invalid-graph", "detail": str(exc)})
        if req.engine == "exact" and g.n > ENGINE_CAP:
            raise HTTPException(
                409, detail={"error": "cap-exceeded",
                             "detail": f"exact engine capped at n={ENGINE_CAP}"}
            )
        session = Session(
            id=uuid.uuid4().hex,
            state=game.new_game(g),
            human_role=req.human_role,
            engine=req.engine,
            hints=req.hints,
        )
        _advance_engine(session)
        store.add(session)
        return _snapshot(session)

    @app.get("/api/sessions/{session_id}")
    def get_state(session_id: str):
        return _snapshot(store.get(session_id))

    @app.post("/api/sessions/{session_id}/moves")
    def post_move(session_id: str, req: PostMove):
        session = store.get(session_id)
        with session.lock:
            if game.is_terminal(session.state):
                raise HTTPException(410, detail={"error": "finished-session"})
            vertices = mask_of(req.vertices)
            try:
                if session.pending_mark is not None:
                    # human Painter replies to the engine's mark
                    session.state = game.apply_move(
                        session.state, session.pending_mark, vertices
                    )
                    session.pending_mark = None
                else:
                    # human Lister marks; engine replies at once
                    game.check_mark(session.state, vertices)
                    reply = _engine_reply(session, vertices)
                    session.state = game.apply_move(session.state, vertices, reply)
            except game.IllegalMove as exc:
                detail = {"error": "illegal-move", "detail": str(exc)}
                if exc.addable is not None:
                    detail["error"] = "not-maximal"
                    detail["addable"] = exc.addable
                raise HTTPException(422, detail=detail)
            _advance_engine(session)
            return _snapshot(session)

    @app.get("/api/sessions/{session_id}/hint")
    def get_hint(session_id: str):
        session = store.get(session_id)
        with session.lock:
            if not session.hints:
                raise HTTPException(403, detail={"error": "hints-disabled"})
            if game.is_terminal(session.state):
                raise HTTPException(410, detail={"error": "finished-session"})
            eng = solver.get_solver(session.graph)
            s = session.state
            if session.pending_mark is not None:
                move = eng.best_reply(s.remaining, session.pending_mark)
                value_to_go = eng.value(s.remaining & ~move)
                projected = s.score + session.pending_mark.bit_count() + value_to_go
            else:
                move = eng.best_mark(s.remaining)
                value_to_go = eng.value(s.remaining)
                projected = s.score + value_to_go
            return {
                "move": sorted(bits(move)),
                "value_to_go": value_to_go,
                "projected_final_score": projected,
            }

    ui_dir = os.environ.get(
        "SLOWCOLOR_UI_DIR",
        os.path.join(os.path.dirname(__file__), "..", "..", "frontend", "dist"),
    )
    if os.path.isdir(ui_dir):
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app


def main():
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=int(os.environ.get("PORT", 8008)))


if __name__ == "__main__":
    main()
