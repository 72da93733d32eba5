"""Utility modules for configuration, logging, and helper functions"""
