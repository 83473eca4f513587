#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/exec.hpp"
#include "tcw/witness.hpp"

namespace tcw {

// Solid edges assert proper inclusion; dashed edges assert inclusion whose
// properness is open.
enum class EdgeKind { proper, inclusion };

// Cited entries carry a literature tag and are not re-checked here. Local
// entries are decided by this workbench at the report's bounds and carry
// their evidence.
enum class CheckStatus { cited, verified, failed };

struct HierarchyEdge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::proper;
    std::string justification;  // citation tag, or the name of the local check
    CheckStatus status = CheckStatus::cited;
    std::string evidence;  // set for local checks
};

// One "lhs = rhs" link of a chained node equality.
struct NodeEquality {
    std::string lhs;
    std::string rhs;
    std::string justification;
    CheckStatus status = CheckStatus::cited;
    std::string evidence;
};

// An incomparability statement, reduced to two set-difference memberships
// that the named witness instances must both establish.
struct IncomparabilityEntry {
    std::string statement;
    std::vector<std::string> witnesses;  // case instance names, e.g. "l-l3 n=4"
    CheckStatus status = CheckStatus::verified;
    std::string evidence;
};

struct HierarchyBounds {
    std::uint32_t k_max = 4;  // width ceiling quoted for the SLT refutations
    std::uint32_t n_max = 4;  // sweep ceiling for the parameterized witnesses
};

struct WitnessSummary {
    std::string instance;
    bool green = false;
};

// Two figures in one report: the map of subregular families (all edges
// proper), and the map of the tree-controlled families they induce, whose
// nodes carry equality chains and whose edges split into proper and
// possibly-proper inclusions.
struct HierarchyReport {
    HierarchyBounds bounds;
    std::vector<HierarchyEdge> subregular_edges;
    std::vector<IncomparabilityEntry> incomparabilities;
    std::vector<NodeEquality> tc_equalities;
    std::vector<HierarchyEdge> tc_edges;
    std::vector<WitnessSummary> witness_sweep;  // every case instance the report ran
    bool green = false;  // no local check failed and every witness report is green
};

// Emits both edge lists. Locally provable entries are verified at the given
// bounds: the two construction-backed subregular edges, the control-language
// equalities of the tree-controlled figure, the finite-control law, and the
// incomparability pattern over the witness catalog. Cited entries keep their
// tags untouched.
HierarchyReport hierarchy_report(const HierarchyBounds& bounds = {}, Exec exec = Exec::serial);

std::string hierarchy_report_text(const HierarchyReport& report);

}  // namespace tcw
