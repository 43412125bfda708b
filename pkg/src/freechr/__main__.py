from freechr.cli import entry_point

entry_point()
