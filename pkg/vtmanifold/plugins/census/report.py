import config
from strings.helpers import REPORT_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.census import CensusStore, report
from vtmanifold.utils.decorators.language import language


@app.on_command(
    "report",
    option("--style", choices=("counts", "orbits"), default="counts"),
    help=REPORT_HELP,
)
@language
async def report_com(args, _):
    store = CensusStore(args.out or config.CENSUS_DIR)
    text = report(store, args.style)
    print(text if text else _["report_1"])
