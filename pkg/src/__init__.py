"""Untwist - locally constant cocycles over shifts of finitely generated groups."""
