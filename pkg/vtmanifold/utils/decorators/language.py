import config
from strings import get_string


def language(mystic):
    async def wrapper(args, **kwargs):
        try:
            _ = get_string(config.LANGUAGE)
        except KeyError:
            _ = get_string("en")
        return await mystic(args, _)

    return wrapper
