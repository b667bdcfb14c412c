# -*- coding: utf-8 -*-

"""Relations, slide moves and exact quotient spans."""
