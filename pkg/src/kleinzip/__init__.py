"""Heawood -> Coxeter -> Klein: zipped heptagon squares and the Klein map."""
