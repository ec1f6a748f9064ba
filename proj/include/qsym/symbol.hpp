/**
 * @file symbol.hpp
 * Global symbol registry for the exact coefficient ring.
 *
 * Symbols come in four kinds: the two base parameters q and t (the only
 * symbols allowed to carry negative exponents), ordinary scalar parameters,
 * and alphabet letters.  Registration order is append-only and fixes the
 * canonical term order everywhere else in the library, so programs that
 * need byte-identical output should register their symbols up front (see
 * register_standard_symbols).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsym {

enum class SymbolKind : uint8_t { BaseQ, BaseT, Parameter, Letter };

/// Lightweight handle; identity is the registration index.
struct Symbol {
    uint32_t id = 0;
    friend bool operator==(Symbol a, Symbol b) { return a.id == b.id; }
    friend bool operator!=(Symbol a, Symbol b) { return a.id != b.id; }
    friend bool operator<(Symbol a, Symbol b) { return a.id < b.id; }
};

/// Append-only registry.  q and t are always present with ids 0 and 1.
class SymbolTable {
  public:
    static SymbolTable& instance();

    Symbol q() const { return Symbol{0}; }
    Symbol t() const { return Symbol{1}; }

    /// Register (or fetch) a scalar parameter by name.
    Symbol parameter(const std::string& name);
    /// Register (or fetch) an alphabet letter by name.
    Symbol letter(const std::string& name);
    /// Fetch an already registered symbol by name; throws if unknown.
    Symbol lookup(const std::string& name) const;
    bool has(const std::string& name) const;

    SymbolKind kind(Symbol s) const;
    const std::string& name(Symbol s) const;
    uint32_t size() const;

    /// True for q and t: the only symbols with Laurent (negative) exponents.
    bool laurent(Symbol s) const {
        SymbolKind k = kind(s);
        return k == SymbolKind::BaseQ || k == SymbolKind::BaseT;
    }
    bool is_letter(Symbol s) const { return kind(s) == SymbolKind::Letter; }

  private:
    SymbolTable();
    Symbol add(const std::string& name, SymbolKind k);

    struct Entry {
        std::string name;
        SymbolKind kind;
    };
    std::vector<Entry> entries_;
};

/// Common symbols pre-registered in a fixed order so that canonical forms
/// do not depend on evaluation order: q t a b c d e f z w x1 x2 x3 x4.
struct StandardSymbols {
    Symbol q, t, a, b, c, d, e, f, z, w, x1, x2, x3, x4;
};
const StandardSymbols& std_syms();

}  // namespace qsym
