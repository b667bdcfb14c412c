# -*- coding: utf-8 -*-

"""Marked intersection graphs."""
