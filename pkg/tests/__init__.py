"""The scripts to test the modules."""
