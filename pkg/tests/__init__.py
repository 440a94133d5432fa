"""
frobeval Test Suite

Unit tests for all frobeval components using pytest.
"""
