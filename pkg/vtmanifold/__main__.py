import asyncio
import importlib
import sys

from vtmanifold import LOGGER, app
from vtmanifold.plugins import ALL_MODULES


async def init(argv=None) -> int:
    for all_module in ALL_MODULES:
        importlib.import_module("vtmanifold.plugins" + all_module)
    LOGGER("vtmanifold.plugins").debug("Successfully Imported Modules...")
    return await app.run(argv)


if __name__ == "__main__":
    sys.exit(asyncio.run(init(sys.argv[1:])))
