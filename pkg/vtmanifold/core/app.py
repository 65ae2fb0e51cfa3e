import logging
import sys
from argparse import ArgumentParser
from typing import Awaitable, Callable, Dict, List, Optional, Sequence, Tuple

import config

from ..logging import LOGGER
from ..utils.exceptions import VTMError

Option = Tuple[Tuple[str, ...], Dict]


def option(*flags: str, **kwargs) -> Option:
    return flags, kwargs


class vtm(ArgumentParser):
    def __init__(self):
        super().__init__(
            prog="vtmanifold",
            description="Enumerate, verify and identify vertex-transitive combinatorial manifolds.",
        )
        self.common = ArgumentParser(add_help=False)
        self.common.add_argument("--catalog", default=config.CATALOG_PATH, help="group catalog file")
        self.common.add_argument("--out", default=None, help="output file or census directory")
        self.common.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
        self.common.add_argument(
            "--budget", type=int, default=config.BISTELLAR_BUDGET, help="bistellar move budget"
        )
        self.common.add_argument(
            "--threads", type=int, default=config.THREADS, help="worker processes (0 = CPU count)"
        )
        self.common.add_argument("--resume", action="store_true")
        self.common.add_argument("--verbose", "-v", action="store_true")
        self.commands = self.add_subparsers(
            dest="command", metavar="COMMAND", parser_class=ArgumentParser
        )
        self.handlers: Dict[str, Callable[..., Awaitable[Optional[int]]]] = {}

    def on_command(self, name: str, *options: Option, help: Optional[str] = None):
        def decorator(func):
            sub = self.commands.add_parser(
                name, parents=[self.common], help=help, description=help
            )
            for flags, kwargs in options:
                sub.add_argument(*flags, **kwargs)
            sub.set_defaults(handler=func)
            self.handlers[name] = func
            return func

        return decorator

    async def run(self, argv: Optional[Sequence[str]] = None) -> int:
        try:
            args = self.parse_args(list(argv) if argv is not None else None)
        except SystemExit as ex:
            return 1 if ex.code else 0
        if getattr(args, "handler", None) is None:
            self.print_help()
            return 1
        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)
        LOGGER(__name__).debug(f"Running {args.command}")
        try:
            code = await args.handler(args)
        except VTMError as ex:
            print(f"error: {ex}", file=sys.stderr)
            LOGGER(__name__).error(f"{args.command} failed: {ex}")
            return 1
        return code or 0

    @property
    def command_names(self) -> List[str]:
        return sorted(self.handlers)
