#pragma once

#include "fimod/fi_module.hpp"

#include <string>
#include <vector>

namespace fimod {

struct CorpusEntry {
    std::string name;
    std::string doc;
    TruncatedFIModule module;
};

/// Named example modules: free modules in small degrees over F2/F3/Q/Z,
/// atomic one-level modules, the constant Z + Z/2 tower, and a two-object
/// discrete-category example. Every entry passes the construction checks.
const std::vector<CorpusEntry>& corpus();

std::vector<std::string> corpus_names();
const CorpusEntry& corpus_entry(const std::string& name); // throws if unknown

/// V_0 = the given object, every higher level zero.
TruncatedFIModule atomic_module(const ModObj& v0, int n);

/// Constant tower with the given object and identity structure maps.
TruncatedFIModule constant_module(const ModObj& level, int n);

} // namespace fimod
