"""Compare the Fano coloring found by search with the one encoded in the
squared-cycle color table, up to collineations and graph automorphisms."""

from kleinzip import census, ooa, search


def main():
    g = census.build_coxeter()
    found = census.find_fano_coloring(g)
    table = census.coloring_from_vertices(g, ooa.paper_vertex_coloring())
    for name, col in (("searched", found), ("table", table)):
        bad = col.violations(g)
        print(f"{name:9s} violations={len(bad)} colors={sorted(set(col.vertex_color.values()))}")
        print("          " + " ".join(f"{census.vertex_name(v)}:{c}"
                                    for v, c in sorted(col.vertex_color.items())))
    group = search.automorphism_group(g)
    same = census.colorings_equivalent(found.vertex_color, table.vertex_color,
                                       automorphisms=group.elements)
    print("equivalent up to collineation and automorphism:", same)


if __name__ == "__main__":
    main()
