#pragma once

#include "invograph/digraph.hpp"
#include "invograph/embed_metrics.hpp"
#include "support.hpp"

// Three domains at 0.1, 0.5, 0.9 with edges
// A->C (2), A->B (1), B->C (1), C->A (1), C->B (1).
inline invograph::Spectrum t3_spectrum() {
    return testing::spectrum_from_scores({{"a.com", 0.1}, {"b.com", 0.5}, {"c.com", 0.9}});
}

inline invograph::Digraph t3_graph() {
    invograph::DigraphBuilder b;
    b.add_edge("a.com", "c.com", 2);
    b.add_edge("a.com", "b.com", 1);
    b.add_edge("b.com", "c.com", 1);
    b.add_edge("c.com", "a.com", 1);
    b.add_edge("c.com", "b.com", 1);
    return b.build();
}

inline invograph::EmbeddedGraph t3_embedded() { return {t3_graph(), t3_spectrum()}; }
