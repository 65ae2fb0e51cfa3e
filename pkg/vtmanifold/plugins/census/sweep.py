import time

import config
from strings.helpers import SWEEP_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.census import CensusStore, sweep
from vtmanifold.core.groups import load_catalog
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.formatters import format_duration


@app.on_command(
    "sweep",
    option("--n-min", type=int, required=True),
    option("--n-max", type=int, help="defaults to --n-min"),
    option("--dims", type=int, nargs="+", help="only these dimensions"),
    option("--groups", nargs="+", help="only these catalog labels or names"),
    option("--time-budget", type=float, help="seconds per task before it is checkpointed"),
    help=SWEEP_HELP,
)
@language
async def sweep_com(args, _):
    start = time.time()
    catalog = load_catalog(args.catalog, strict=False)
    store = CensusStore(args.out or config.CENSUS_DIR)
    n_max = args.n_max if args.n_max is not None else args.n_min
    summary = await sweep(
        store,
        catalog,
        range(args.n_min, n_max + 1),
        args.dims,
        args.groups,
        args.threads,
        args.time_budget,
        args.resume,
        args.seed,
        args.budget,
    )
    for n in summary.missing_degrees:
        print(_["sweep_2"].format(n))
    for n in summary.lower_bound_degrees:
        print(_["sweep_4"].format(n))
    for task_id in summary.timed_out:
        print(_["sweep_3"].format(task_id, format_duration(args.time_budget)))
    print(
        _["sweep_1"].format(
            summary.tasks,
            summary.new_records,
            len(summary.timed_out),
            format_duration(time.time() - start),
        )
    )
    if summary.partial or store.undetermined():
        return 2
