def time_formatter(milliseconds: float) -> str:
    """Returns an elapsed time in a human-readable format"""
    seconds, millis = divmod(int(milliseconds), 1000)
    minutes, seconds = divmod(seconds, 60)
    hours, minutes = divmod(minutes, 60)
    tmp = (
        ((str(hours) + "h, ") if hours else "")
        + ((str(minutes) + "m, ") if minutes else "")
        + ((str(seconds) + "s, ") if seconds else "")
        + ((str(millis) + "ms, ") if millis or not (hours or minutes or seconds) else "")
    )
    return tmp[:-2]
