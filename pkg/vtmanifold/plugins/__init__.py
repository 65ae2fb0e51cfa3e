import glob
from os.path import dirname, isfile, relpath, splitext


def __list_all_modules():
    work_dir = dirname(__file__)
    plugin_paths = glob.glob(work_dir + "/*/*.py")
    return [
        "." + splitext(relpath(path, work_dir))[0].replace("/", ".")
        for path in plugin_paths
        if isfile(path) and not path.endswith("__init__.py")
    ]


ALL_MODULES = sorted(__list_all_modules())
__all__ = ALL_MODULES + ["ALL_MODULES"]
