import os

import yaml

LANGS_DIR = os.path.join(os.path.dirname(__file__), "langs")

languages = {}
languages_present = {}


def get_string(lang: str):
    return languages[lang]


def _load(name: str) -> dict:
    with open(os.path.join(LANGS_DIR, name + ".yml"), encoding="utf8") as fh:
        return yaml.safe_load(fh)


languages["en"] = _load("en")
languages_present["en"] = languages["en"]["name"]
for filename in sorted(os.listdir(LANGS_DIR)):
    if not filename.endswith(".yml") or filename == "en.yml":
        continue
    language_name = filename[:-4]
    languages[language_name] = _load(language_name)
    for item in languages["en"]:
        if item not in languages[language_name]:
            languages[language_name][item] = languages["en"][item]
    try:
        languages_present[language_name] = languages[language_name]["name"]
    except KeyError:
        raise SystemExit(f"[ERROR] - Language file {filename} has no name.")
