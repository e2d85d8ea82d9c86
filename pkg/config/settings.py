""" Configuration file for the Miura divisor class group toolkit """
import logging
import os
from dotenv import load_dotenv

load_dotenv()

# Configure logging
LOG_LEVEL = os.getenv("MIURA_LOG_LEVEL", "WARNING").upper()
logging.basicConfig(level=LOG_LEVEL, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# Transcript format for `miura run` and `miura repl` (text or json)
OUTPUT_FORMAT = os.getenv("MIURA_OUTPUT_FORMAT", "text")
OUTPUT_FORMATS = ("text", "json")

# Fixture scripts reproducing the worked sessions
SESSIONS_DIR = os.getenv("MIURA_SESSIONS_DIR", "data/sessions")
ELLIPTIC_SESSION = "elliptic_q.miura"
MIURA_SESSION = "miura_gf5.miura"

# Primes swept by the chord-tangent crosscheck
ORACLE_PRIMES = tuple(int(p) for p in os.getenv("MIURA_ORACLE_PRIMES", "5,7,11,13").split(","))

# Buchberger pair selection: "normal" (smallest lcm first) or "first" (oldest pair first)
PAIR_SELECTION = os.getenv("MIURA_PAIR_SELECTION", "normal")

# Interactive prompt
REPL_PROMPT = os.getenv("MIURA_REPL_PROMPT", "miura> ")

# Name of the auxiliary variable adjoined for ideal intersection; not a valid script identifier
ELIMINATION_VARIABLE = "@u"

# Entries kept in the memo of canonical exponents per (Psi, weights)
CANONICAL_CACHE_SIZE = int(os.getenv("MIURA_CANONICAL_CACHE_SIZE", "4096"))

# Exit codes
EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_ERROR = 2
