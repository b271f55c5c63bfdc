#include "superdiv/context.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace superdiv {

namespace {

bool valid_name(const std::string& name) {
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

VariableContext::VariableContext(std::vector<std::string> even_vars,
                                 std::vector<std::string> odd_vars)
    : even_(std::move(even_vars)), odd_(std::move(odd_vars)) {
    if (odd_.size() > 64)
        throw std::invalid_argument("at most 64 odd variables are supported");
    for (std::size_t i = 0; i < even_.size(); ++i) {
        if (!valid_name(even_[i]))
            throw std::invalid_argument("invalid variable name: '" + even_[i] + "'");
        if (!lookup_.emplace(even_[i], VarRef{Parity::Even, i}).second)
            throw std::invalid_argument("duplicate variable name: '" + even_[i] + "'");
    }
    for (std::size_t i = 0; i < odd_.size(); ++i) {
        if (!valid_name(odd_[i]))
            throw std::invalid_argument("invalid variable name: '" + odd_[i] + "'");
        if (!lookup_.emplace(odd_[i], VarRef{Parity::Odd, i}).second)
            throw std::invalid_argument("duplicate variable name: '" + odd_[i] + "'");
    }
}

std::optional<VarRef> VariableContext::find(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

VarRef VariableContext::require(const std::string& name) const {
    auto ref = find(name);
    if (!ref) throw std::invalid_argument("unknown variable: '" + name + "'");
    return *ref;
}

std::string VariableContext::header() const {
    std::ostringstream out;
    if (!even_.empty()) {
        out << "even";
        for (const auto& n : even_) out << ' ' << n;
    }
    if (!odd_.empty()) {
        if (!even_.empty()) out << "; ";
        out << "odd";
        for (const auto& n : odd_) out << ' ' << n;
    }
    return out.str();
}

ContextPtr make_context(std::vector<std::string> even_vars,
                        std::vector<std::string> odd_vars) {
    return std::make_shared<const VariableContext>(std::move(even_vars),
                                                   std::move(odd_vars));
}

ContextPtr parse_context(const std::string& header) {
    std::vector<std::string> even, odd;
    std::vector<std::string>* current = nullptr;
    bool seen_even = false, seen_odd = false;

    std::string section;
    std::istringstream sections(header);
    while (std::getline(sections, section, ';')) {
        std::istringstream words(section);
        std::string word;
        if (!(words >> word)) continue;  // empty section
        if (word == "even") {
            if (seen_even || seen_odd)
                throw std::invalid_argument("context header: 'even' section out of order");
            seen_even = true;
            current = &even;
        } else if (word == "odd") {
            if (seen_odd)
                throw std::invalid_argument("context header: duplicate 'odd' section");
            seen_odd = true;
            current = &odd;
        } else {
            throw std::invalid_argument("context header: expected 'even' or 'odd', got '" +
                                        word + "'");
        }
        while (words >> word) current->push_back(word);
    }
    if (!seen_even && !seen_odd)
        throw std::invalid_argument("context header: no 'even' or 'odd' section");
    return make_context(std::move(even), std::move(odd));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace superdiv
