__version__ = '1.0.0'

from zx_axiom_verifier.verifier import ZXVerifier
