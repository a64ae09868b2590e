#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpx {

/// Ordered registry of symbols (parameters, the exponent parameter, unknown
/// exponent symbols, free constants). The declaration order fixes the
/// canonical monomial order for the whole problem. The table only grows.
class SymbolTable {
public:
    int add(const std::string& name) {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return (int)i;
        names_.push_back(name);
        return (int)names_.size() - 1;
    }

    int find(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return (int)i;
        return -1;
    }

    const std::string& name(int idx) const {
        if (idx < 0 || idx >= (int)names_.size())
            throw std::out_of_range("symbol index");
        return names_[idx];
    }

    int size() const { return (int)names_.size(); }

    /// A name not yet in the table, derived from `base`.
    std::string fresh(const std::string& base) const {
        if (find(base) < 0) return base;
        for (int i = 1;; ++i) {
            std::string cand = base + "_" + std::to_string(i);
            if (find(cand) < 0) return cand;
        }
    }

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<SymbolTable>;

inline RingPtr make_ring() { return std::make_shared<SymbolTable>(); }

} // namespace gpx
