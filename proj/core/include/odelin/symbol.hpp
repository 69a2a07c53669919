#ifndef ODELIN_SYMBOL_HPP
#define ODELIN_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace odelin {

/// An indeterminate of the coefficient ring. The base variables x and y are
/// always present with ids 0 and 1; every other symbol is a parameter and is
/// ordered after them by declaration order.
struct Symbol {
    std::uint32_t id = 0;

    static Symbol x() { return Symbol{0}; }
    static Symbol y() { return Symbol{1}; }

    bool is_parameter() const { return id >= 2; }
    const std::string& name() const;

    auto operator<=>(const Symbol&) const = default;
};

/// Registers (or finds) a parameter symbol by name. "x" and "y" resolve to the
/// base variables. Names must be identifiers: [A-Za-z][A-Za-z0-9_]*.
Symbol declare_parameter(const std::string& name);

/// Looks up a symbol that has already been declared.
std::optional<Symbol> find_symbol(const std::string& name);

/// Number of symbols declared so far (>= 2).
std::uint32_t symbol_count();

} // namespace odelin

#endif
