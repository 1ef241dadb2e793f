#include "cograg/prompts.hpp"

#include <regex>

#include "cograg/errors.hpp"
#include "cograg/prompt_assets.gen.hpp"

namespace cograg {

namespace {

const std::regex kPlaceholder(R"(\{([a-z0-9_]+)\})");

std::set<std::string> scan_placeholders(const std::string& body) {
    std::set<std::string> names;
    for (auto it = std::sregex_iterator(body.begin(), body.end(), kPlaceholder);
         it != std::sregex_iterator(); ++it) {
        names.insert((*it)[1].str());
    }
    return names;
}

}  // namespace

PromptTemplate PromptTemplate::from_body(std::string name, std::string body) {
    PromptTemplate t;
    t.name = std::move(name);
    t.required_placeholders = scan_placeholders(body);
    t.body = std::move(body);
    return t;
}

const PromptRegistry& PromptRegistry::embedded() {
    static const PromptRegistry registry = [] {
        PromptRegistry r;
        for (const auto& asset : assets::all_prompts) {
            r.templates_.emplace(std::string(asset.name),
                                 PromptTemplate::from_body(std::string(asset.name),
                                                           std::string(asset.body)));
        }
        return r;
    }();
    return registry;
}

const PromptTemplate& PromptRegistry::get(std::string_view name) const {
    auto it = templates_.find(name);
    if (it == templates_.end()) {
        throw Error(ErrorKind::lookup, "unknown prompt template: " + std::string(name));
    }
    return it->second;
}

std::vector<std::string> PromptRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(templates_.size());
    for (const auto& [name, _] : templates_) out.push_back(name);
    return out;
}

std::string render_prompt(const PromptTemplate& tmpl,
                          const std::map<std::string, std::string>& bindings) {
    for (const auto& [name, _] : bindings) {
        if (!tmpl.required_placeholders.count(name)) {
            throw Error(ErrorKind::usage,
                        "binding '" + name + "' does not match any placeholder of template '" +
                            tmpl.name + "'");
        }
    }
    for (const auto& required : tmpl.required_placeholders) {
        if (!bindings.count(required)) {
            throw Error(ErrorKind::usage,
                        "missing binding for placeholder '" + required + "' of template '" +
                            tmpl.name + "'");
        }
    }

    std::string out;
    out.reserve(tmpl.body.size());
    std::size_t pos = 0;
    auto begin = std::sregex_iterator(tmpl.body.begin(), tmpl.body.end(), kPlaceholder);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const auto& match = *it;
        out.append(tmpl.body, pos, static_cast<std::size_t>(match.position()) - pos);
        out.append(bindings.at(match[1].str()));
        pos = static_cast<std::size_t>(match.position() + match.length());
    }
    out.append(tmpl.body, pos, std::string::npos);
    return out;
}

}  // namespace cograg
