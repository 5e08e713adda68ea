"""Bounded-chain minor embedding and graph coloring: screening, exact and
heuristic solvers, verification and instruction-record generation."""

from __future__ import annotations

__version__ = "0.1.0"

from .chains import ChainFamily, enumerate_chains
from .encoders import encode_embedding, encode_kcoloring, encode_mincoloring
from .exact import Budget, Certificate, exact_color, exact_embed, min_color
from .fjump import FjConfig, FjResult, Phase2Config, fj_phase2, fj_search
from .graph import Graph, GraphSpec, chimera, generate, top2_info
from .instance import ColoringInstance, EmbeddingInstance
from .milp import Model, is_feasible
from .screening import ScreenResult, zero_phase_screen
from .verify import Candidate, Verdict, best_of_n, parse_candidate, verify_coloring, verify_embedding

__all__ = [
    "Budget", "Candidate", "Certificate", "ChainFamily", "ColoringInstance", "EmbeddingInstance",
    "FjConfig", "FjResult", "Graph", "GraphSpec", "Model", "Phase2Config", "ScreenResult", "Verdict",
    "best_of_n", "chimera", "encode_embedding", "encode_kcoloring", "encode_mincoloring", "enumerate_chains",
    "exact_color", "exact_embed", "fj_phase2", "fj_search", "generate", "is_feasible", "min_color",
    "parse_candidate", "top2_info", "verify_coloring", "verify_embedding", "zero_phase_screen",
]
