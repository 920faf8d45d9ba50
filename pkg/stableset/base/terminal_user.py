from warnings import warn


def terminal_progress_update(
    prog_type,
    num_trials,
    current_trial,
    msg="",
):
    if prog_type == "suite":
        if current_trial == 0:
            print(f"Starting {msg} over {num_trials} graphs")
        if current_trial % 10 == 0:
            print(f"-----Graph {current_trial} of {num_trials}")
    elif prog_type == "corpus":
        print(f"Enumerating {msg} (up to {num_trials})")
    elif prog_type == "warning":
        warn(msg, stacklevel=2)
    elif prog_type == "check-fail":
        print(f"On graph {current_trial} of {num_trials} : {msg}")
    elif prog_type == "status":
        print(msg)

    # Continue run
    return True


def quiet_progress_update(prog_type, num_trials, current_trial, msg=""):
    """Progress callback that only forwards warnings."""
    if prog_type == "warning":
        warn(msg, stacklevel=2)
    return True
