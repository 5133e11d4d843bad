"""
Runtime settings
Reads verifier defaults from the environment (and a local .env file)
"""

import os
from dotenv import load_dotenv

load_dotenv()

DEFAULT_CELLS = int(os.getenv("FROB_CELLS") or 8)
DEFAULT_ELL = int(os.getenv("FROB_ELL") or 1)
DEFAULT_EPSILON = float(os.getenv("FROB_EPSILON") or 0.1)
DEFAULT_STEP_DIV = int(os.getenv("FROB_STEP_DIV") or 200)
DEFAULT_SEED = int(os.getenv("FROB_SEED") or 1234)
PROPERTY_CASES = int(os.getenv("FROB_PROPERTY_CASES") or 500)
RANDOM_PAIRS = int(os.getenv("FROB_RANDOM_PAIRS") or 200)
LOG_LEVEL = (os.getenv("FROB_LOG_LEVEL") or "INFO").upper()
