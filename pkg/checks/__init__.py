"""Checks on configurations, matrices and states, and the exception hierarchy."""
