"""HTTP scoring service speaking the /v1 fill protocol."""

from .app import create_app
from .backends import HfMaskedLmBackend, MockBigramBackend, build_backend

__version__ = "0.1.0"
