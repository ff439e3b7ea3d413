#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "raddeg/ar.hpp"
#include "raddeg/degrees.hpp"
#include "raddeg/report.hpp"
#include "raddeg/workspace.hpp"

namespace raddeg {

inline const std::vector<std::string> kTheorems{"A",     "B",          "C",           "degree-kernel",    "mono-epi",
                                                "shift", "kernel-iso", "finite-type", "kernel-comparison"};

// every report the named verifier produces on a workspace with a catalogue
template <ExactField F>
std::vector<TheoremReport> verify_theorem(const RadicalTable<F>& t, const ArEngine<F>& e, const std::string& theorem);

// args exclude the program name; returns the process exit code
// (0 verified or hypothesis-not-met, 2 VIOLATION, 1 usage or input errors)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace raddeg
