#include "qsym/symbol.hpp"

#include <mutex>
#include <stdexcept>

namespace qsym {

namespace {
std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

SymbolTable::SymbolTable() {
    entries_.push_back({"q", SymbolKind::BaseQ});
    entries_.push_back({"t", SymbolKind::BaseT});
}

SymbolTable& SymbolTable::instance() {
    static SymbolTable table;
    return table;
}

Symbol SymbolTable::add(const std::string& name, SymbolKind k) {
    std::lock_guard<std::mutex> lock(table_mutex());
    for (uint32_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].name == name) {
            if (entries_[i].kind != k)
                throw std::invalid_argument("symbol '" + name +
                                            "' already registered with a different kind");
            return Symbol{i};
        }
    }
    entries_.push_back({name, k});
    return Symbol{static_cast<uint32_t>(entries_.size() - 1)};
}

Symbol SymbolTable::parameter(const std::string& name) { return add(name, SymbolKind::Parameter); }
Symbol SymbolTable::letter(const std::string& name) { return add(name, SymbolKind::Letter); }

Symbol SymbolTable::lookup(const std::string& name) const {
    std::lock_guard<std::mutex> lock(table_mutex());
    for (uint32_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].name == name) return Symbol{i};
    throw std::invalid_argument("unknown symbol '" + name + "'");
}

bool SymbolTable::has(const std::string& name) const {
    std::lock_guard<std::mutex> lock(table_mutex());
    for (const auto& e : entries_)
        if (e.name == name) return true;
    return false;
}

SymbolKind SymbolTable::kind(Symbol s) const {
    std::lock_guard<std::mutex> lock(table_mutex());
    if (s.id >= entries_.size()) throw std::logic_error("symbol id out of range");
    return entries_[s.id].kind;
}

const std::string& SymbolTable::name(Symbol s) const {
    std::lock_guard<std::mutex> lock(table_mutex());
    if (s.id >= entries_.size()) throw std::logic_error("symbol id out of range");
    return entries_[s.id].name;
}

uint32_t SymbolTable::size() const {
    std::lock_guard<std::mutex> lock(table_mutex());
    return static_cast<uint32_t>(entries_.size());
}

const StandardSymbols& std_syms() {
    static StandardSymbols s = [] {
        auto& tb = SymbolTable::instance();
        StandardSymbols r;
        r.q = tb.q();
        r.t = tb.t();
        r.a = tb.parameter("a");
        r.b = tb.parameter("b");
        r.c = tb.parameter("c");
        r.d = tb.parameter("d");
        r.e = tb.parameter("e");
        r.f = tb.parameter("f");
        r.z = tb.parameter("z");
        r.w = tb.letter("w");
        r.x1 = tb.letter("x1");
        r.x2 = tb.letter("x2");
        r.x3 = tb.letter("x3");
        r.x4 = tb.letter("x4");
        return r;
    }();
    return s;
}

}  // namespace qsym
