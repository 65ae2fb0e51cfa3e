from strings.helpers import HOMOLOGY_HELP
from vtmanifold import app
from vtmanifold.core.app import option
from vtmanifold.core.complex import is_connected
from vtmanifold.core.homology import (
    abelianization,
    format_abelianization,
    format_homology,
    integer_homology,
    link_homology_all,
    pi1_presentation,
    poincare_z2_check,
)
from vtmanifold.utils.decorators.language import language
from vtmanifold.utils.exceptions import ComplexError
from vtmanifold.utils.fileio import read_complex
from vtmanifold.utils.formatters import format_z2


@app.on_command(
    "homology",
    option("file", help="complex file: 'n d' then one facet per line"),
    option("--z2", action="store_true", help="also print Z2 Betti numbers and the duality check"),
    option("--links", action="store_true", help="homology of the vertex links"),
    option("--pi1", action="store_true", help="edge-path presentation of the fundamental group"),
    help=HOMOLOGY_HELP,
)
@language
async def homology_com(args, _):
    M = read_complex(args.file)
    if not is_connected(M):
        raise ComplexError(_["homology_6"])
    profile = integer_homology(M)
    print(format_homology(profile))
    if args.z2:
        print(_["homology_1"].format(format_z2(profile.z2_betti)))
        print(_["homology_2"].format(_["word_yes"] if poincare_z2_check(M, profile) else _["word_no"]))
    if args.links:
        for v, link_profile in link_homology_all(M).items():
            print(_["homology_3"].format(v, format_homology(link_profile)))
    if args.pi1:
        presentation = pi1_presentation(M)
        print(_["homology_4"].format(presentation))
        print(_["homology_5"].format(format_abelianization(*abelianization(presentation))))
