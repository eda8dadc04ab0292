#pragma once

#include <string>
#include <vector>

#include "deltaderive/solver.hpp"

namespace dd {

struct CatalogEntry {
    std::string algebra_name;  // CLI handle: q, jvf2..jvf5, m2full, m2plus, symp6, albert...
    std::string module_name;   // regular, S+b1, S-b1, S+b2, S-b2, S-, C0u, ...
    std::string family;        // rationals | jvf | full-matrix | symmetric | symplectic | albert
    Bimodule module;           // carries the algebra
    bool regular = false;      // isomorphic to the regular bimodule
    bool slow = false;         // 27-dimensional direct solves
    int expected_half_dim = 0;
    std::string note;

    std::string name() const { return algebra_name + "/" + module_name; }
};

// The runnable (algebra, module) registry. filter: substring match on
// algebra_name, module_name or family; empty matches everything. Case (v)
// of the classification is intentionally absent, see case_v_note().
std::vector<CatalogEntry> catalog_entries(const std::string& filter = "");

const char* case_v_note();

// Five fixed pseudo-random probe values outside {0, 1, 1/2}.
std::vector<Rational> probe_deltas();

struct WhiteheadRow {
    std::string entry;
    Rational delta;
    int dim = 0;
    bool ok = true;
    std::string note;
};

struct WhiteheadReport {
    std::vector<WhiteheadRow> rows;
    bool pass = true;
    std::string failure;  // first offending (entry, delta) description
};

// For each entry: solve at delta in {1, 1/2} and the probe values; assert
// dim = 1 with identity basis at 1/2 exactly on regular modules, 0 at the
// probes, and (for regular modules) dim at 1 equal to the independent
// inner-derivation span. Also pushes one semisimple composite, M2+ (+) Q with
// the regular module, through both direct-sum lemmas.
WhiteheadReport whitehead_report(const std::vector<CatalogEntry>& entries,
                                 bool run_composite = true);

}  // namespace dd
