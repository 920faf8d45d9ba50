import os
import platform

try:
    from .version import version as _version
except ImportError:
    # running from a source tree that was never installed
    _version = "unknown"

# name of the log file written into the output directory
LOG_NAME = "runs.log"


# attributes that are run machinery, not run arguments
_NOT_ARGUMENTS = ("no_log", "info", "progress_update")


def fill_log(run_obj):
    """
    Standard log entries for a suite run.

    Parameters
    ----------
    run_obj : object
        Object whose public attributes are the run arguments. Names listed in
        ``run_obj.no_log`` are skipped.

    Returns
    -------
    dict
        ``stableset version``, ``suite`` (qualified class name), ``platform``
        and ``Arguments``, the comma separated ``name = repr`` pairs.
    """
    skip = set(_NOT_ARGUMENTS).union(getattr(run_obj, "no_log", ()))
    args = [f"{k} = {v!r}" for k, v in vars(run_obj).items() if not k.startswith("_") and k not in skip]

    cls = type(run_obj)
    return {
        "stableset version": _version,
        "suite": f"{cls.__module__}.{cls.__qualname__}",
        "platform": platform.platform(),
        "Arguments": ",".join(args),
    }


def format_text_block(text):
    """
    Format a, possibly, multi line text block for the log.

    Parameters
    ----------
    text : str
        Block of text to format.
    """

    if text is None:
        return ""

    return "".join(["\t" + line + "\n" for line in text.splitlines(keepends=False)])


def pre(info={}, outdir=""):
    """
    Write the start of a run entry to the run log.

    Parameters
    ----------
    info : dict
        Run info. Must contain ``test`` and ``Tstart``; ``Pre Test Notes`` is
        optional.
    outdir : str
        Directory containing the log.
    """

    # length to pad run params to
    pad_len = 10

    log_path = os.path.join(outdir, LOG_NAME)

    skip_keys = ["test", "Tstart", "Pre Test Notes"]

    with open(log_path, "a") as file:

        file.write(f"\n>>{info['test']} started at {info['Tstart'].strftime('%d-%b-%Y %H:%M:%S')}\n")
        for key in info:
            if key not in skip_keys:
                file.write(f"\t{key:<{pad_len}} : {info[key]}\n")

        file.write("===Pre-Test Notes===\n")
        file.write(format_text_block(info.get("Pre Test Notes")))


def post(info={}, outdir=""):
    """
    Write the end of a run entry to the run log.

    ``Error Notes`` in `info` marks the run as failed, otherwise
    ``Post Test Notes`` are written.

    Parameters
    ----------
    info : dict
        Run info.
    outdir : str
        Directory containing the log.
    """

    log_path = os.path.join(outdir, LOG_NAME)

    with open(log_path, "a") as file:
        if "Error Notes" in info:
            notes = info["Error Notes"]
            header = "===Test-Error Notes==="
        else:
            header = "===Post-Test Notes==="
            notes = info.get("Post Test Notes", "")

        # write header
        file.write(header + "\n")
        # write notes
        file.write(format_text_block(notes))
        # write end
        file.write("===End Test===\n\n")


def read_entries(outdir=""):
    """
    Parse the run log into a list of entries.

    Returns
    -------
    list of dict
        One dict per entry with keys ``test``, ``started``, the logged fields,
        ``pre_notes``, ``post_notes`` or ``error_notes`` and ``complete``.
    """
    log_path = os.path.join(outdir, LOG_NAME)
    entries = []
    section = None

    with open(log_path, "r") as file:
        for line in file:
            line = line.rstrip("\n")
            if line.startswith(">>"):
                test, _, started = line[2:].partition(" started at ")
                entries.append({"test": test, "started": started, "complete": False})
                section = None
            elif not entries:
                continue
            elif line == "===Pre-Test Notes===":
                section = "pre_notes"
                entries[-1][section] = ""
            elif line == "===Post-Test Notes===":
                section = "post_notes"
                entries[-1][section] = ""
            elif line == "===Test-Error Notes===":
                section = "error_notes"
                entries[-1][section] = ""
            elif line == "===End Test===":
                entries[-1]["complete"] = True
                section = None
            elif line.startswith("\t") and section is not None:
                entries[-1][section] += line[1:] + "\n"
            elif line.startswith("\t"):
                key, _, value = line[1:].partition(" : ")
                entries[-1][key.strip()] = value

    return entries
