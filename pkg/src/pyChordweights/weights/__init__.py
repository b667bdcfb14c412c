# -*- coding: utf-8 -*-

"""Weight systems and their polynomial values."""
