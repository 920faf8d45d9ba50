import appdirs
import argparse
import configparser
import os

appname = "stableset"
appauthor = "stableset"

# section of config.ini holding run defaults
SECTION = "defaults"

# environment variable overriding the tree node cap
NODE_CAP_ENV = "STABLESET_CAP_NODES"

DEFAULTS = {
    "seed": 0,
    "samples": 25,
    "points": 50,
    "node_cap": 10**6,
    "term_cap": 10**7,
    "jobs": 0,
}


def config_path():
    """Location of the user config file."""
    return os.path.join(appdirs.user_data_dir(appname, appauthor), "config.ini")


def load_config(path=None):
    """
    Resolve run defaults.

    Values come from `DEFAULTS`, overridden by the ``[defaults]`` section of
    the config file, with the tree node cap finally overridden by the
    ``STABLESET_CAP_NODES`` environment variable.

    Parameters
    ----------
    path : str, default=None
        Config file to read. The per-user file is used when None.

    Returns
    -------
    dict
        Resolved integer values keyed like `DEFAULTS`.

    Raises
    ------
    ValueError
        If a configured value is not an integer.
    """
    if path is None:
        path = config_path()

    # create a config parser
    config = configparser.ConfigParser()
    config.read(path)

    values = dict(DEFAULTS)
    if config.has_section(SECTION):
        for k, v in config[SECTION].items():
            if k not in DEFAULTS:
                continue
            try:
                values[k] = int(v)
            except ValueError:
                raise ValueError(f"config value {k} = {v!r} in '{path}' is not an integer") from None

    env = os.environ.get(NODE_CAP_ENV)
    if env:
        try:
            values["node_cap"] = int(env)
        except ValueError:
            raise ValueError(f"{NODE_CAP_ENV}={env!r} is not an integer") from None

    return values


def node_cap(path=None):
    return load_config(path)["node_cap"]


def term_cap(path=None):
    return load_config(path)["term_cap"]


def set_config(key, value, path=None):
    """
    Store a default in the config file.

    Raises
    ------
    ValueError
        If `key` is unknown or `value` is not an integer.
    """
    if key not in DEFAULTS:
        raise ValueError(f"Unknown config key '{key}', expected one of {tuple(DEFAULTS)}")
    int(value)

    if path is None:
        # Make application directories if they do not exist
        os.makedirs(appdirs.user_data_dir(appname, appauthor), exist_ok=True)
        path = config_path()

    config = configparser.ConfigParser()
    config.read(path)
    if not config.has_section(SECTION):
        config[SECTION] = {}
    config[SECTION][key] = str(int(value))

    with open(path, "w") as configfile:
        config.write(configfile)


def print_config(path=None):
    """Print resolved defaults and where they came from."""
    print(f"----{path or config_path()}----")
    for k, v in load_config(path).items():
        print(f"{k}: {v}")


def main():
    """Command line method to show or edit stored defaults."""
    parser = argparse.ArgumentParser(description="Show or edit stableset run defaults")
    parser.add_argument(
        "--set",
        nargs=2,
        metavar=("KEY", "VALUE"),
        action="append",
        default=[],
        help=f"Store a default. Keys : {', '.join(DEFAULTS)}",
    )
    parser.add_argument("--config", default=None, help="Config file to use instead of the per-user one")
    args = parser.parse_args()

    for key, value in args.set:
        set_config(key, value, path=args.config)

    print_config(args.config)


if __name__ == "__main__":
    main()
