# -*- coding: utf-8 -*-

"""Chord diagrams, their canonical forms and formal combinations."""
