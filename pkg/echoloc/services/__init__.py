"""Provides the spectral model and graph back ends used by the processes."""
