"""Rees-like algebras of polynomial ideals in exact arithmetic."""
