#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace superdiv {

enum class Parity { Even, Odd };

struct VarRef {
    Parity parity;
    std::size_t index;  // position within the even or odd list
};

// Immutable set of named generators: commuting even variables and
// anticommuting odd variables. Declaration order is the canonical order used
// for monomial normal forms and printing. Polynomials hold a shared_ptr to
// their context; operations across different contexts are errors, never
// implicit unions.
class VariableContext {
public:
    VariableContext(std::vector<std::string> even_vars,
                    std::vector<std::string> odd_vars);

    std::size_t even_count() const { return even_.size(); }
    std::size_t odd_count() const { return odd_.size(); }
    const std::vector<std::string>& even_names() const { return even_; }
    const std::vector<std::string>& odd_names() const { return odd_; }
    const std::string& even_name(std::size_t i) const { return even_.at(i); }
    const std::string& odd_name(std::size_t i) const { return odd_.at(i); }

    std::optional<VarRef> find(const std::string& name) const;
    VarRef require(const std::string& name) const;  // throws if unknown
    bool has(const std::string& name) const { return find(name).has_value(); }

    bool operator==(const VariableContext& other) const {
        return even_ == other.even_ && odd_ == other.odd_;
    }
    bool operator!=(const VariableContext& other) const { return !(*this == other); }

    // Canonical declaration header, e.g. "even z1 z2; odd t1 t2".
    std::string header() const;

private:
    std::vector<std::string> even_;
    std::vector<std::string> odd_;
    std::map<std::string, VarRef> lookup_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> even_vars,
                        std::vector<std::string> odd_vars);

// Parses a declaration header: "even z1 z2; odd t1 t2". Either section may be
// omitted; order of sections is fixed (even first).
ContextPtr parse_context(const std::string& header);

// True when the two pointers denote the same generator set (pointer identity
// or content equality).
bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace superdiv
