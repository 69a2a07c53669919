#include "odelin/symbol.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace odelin {

namespace {

struct Registry {
    std::vector<std::string> names{"x", "y"};
    std::unordered_map<std::string, std::uint32_t> ids{{"x", 0}, {"y", 1}};
    std::mutex mutex;
};

Registry& registry() {
    static Registry r;
    return r;
}

bool valid_identifier(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

const std::string& Symbol::name() const {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    if (id >= r.names.size()) throw std::logic_error("unknown symbol id");
    return r.names[id];
}

Symbol declare_parameter(const std::string& name) {
    if (!valid_identifier(name)) throw std::invalid_argument("invalid symbol name: '" + name + "'");
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.ids.find(name);
    if (it != r.ids.end()) return Symbol{it->second};
    auto id = static_cast<std::uint32_t>(r.names.size());
    r.names.push_back(name);
    r.ids.emplace(name, id);
    return Symbol{id};
}

std::optional<Symbol> find_symbol(const std::string& name) {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.ids.find(name);
    if (it == r.ids.end()) return std::nullopt;
    return Symbol{it->second};
}

std::uint32_t symbol_count() {
    auto& r = registry();
    std::lock_guard lock(r.mutex);
    return static_cast<std::uint32_t>(r.names.size());
}

} // namespace odelin
