"""Reading configurations and input files, logging and export helpers."""
