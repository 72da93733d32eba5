"""Solvers for election control instances"""
