from os import getenv

from dotenv import load_dotenv

load_dotenv()

# Seed for every randomized search (bistellar flips); runs are reproducible per seed.
DEFAULT_SEED = int(getenv("DEFAULT_SEED", 0))

# Bistellar flip search: total moves, stall length before heating, heating length.
BISTELLAR_BUDGET = int(getenv("BISTELLAR_BUDGET", 50000))
HEAT_AFTER = int(getenv("HEAT_AFTER", 2000))
HEAT_MOVES = int(getenv("HEAT_MOVES", 50))
# Heating rounds without a new best complex before a reduction gives up.
HEAT_ROUNDS = int(getenv("HEAT_ROUNDS", 8))
# Accepted moves between isomorphism tests while searching for an equivalence.
EQUIV_CADENCE = int(getenv("EQUIV_CADENCE", 25))

# Largest group materialized by closure.
GROUP_CAP = int(getenv("GROUP_CAP", 1000000))

# Above this many faces only Z2 ranks are computed.
HOMOLOGY_MAX_CELLS = int(getenv("HOMOLOGY_MAX_CELLS", 250000))

# Search nodes between two checkpoint writes of a running enumeration.
CHECKPOINT_EVERY = int(getenv("CHECKPOINT_EVERY", 20000))

# Worker processes for sweeps, 0 means one per physical core.
THREADS = int(getenv("THREADS", 0))

CATALOG_PATH = getenv("CATALOG_PATH", "data/catalog.json")
CENSUS_DIR = getenv("CENSUS_DIR", "census")
LOG_FILE = getenv("LOG_FILE", "log.txt")
LANGUAGE = getenv("LANGUAGE", "en")


if BISTELLAR_BUDGET < 0:
    raise SystemExit("[ERROR] - BISTELLAR_BUDGET must be a non-negative number of moves.")

if HEAT_AFTER < 1 or HEAT_MOVES < 1 or HEAT_ROUNDS < 1:
    raise SystemExit(
        "[ERROR] - HEAT_AFTER, HEAT_MOVES and HEAT_ROUNDS must all be positive."
    )

if EQUIV_CADENCE < 1:
    raise SystemExit("[ERROR] - EQUIV_CADENCE must be positive.")

if GROUP_CAP < 1:
    raise SystemExit("[ERROR] - GROUP_CAP must be positive.")

if THREADS < 0:
    raise SystemExit("[ERROR] - THREADS must be 0 (auto) or a positive worker count.")
