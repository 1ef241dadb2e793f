#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cograg {

/// One named prompt body with `{placeholder}` markers. Required
/// placeholders are derived by scanning the body, so the "every required
/// placeholder appears in the body" invariant holds by construction.
struct PromptTemplate {
    std::string name;
    std::string body;
    std::set<std::string> required_placeholders;

    static PromptTemplate from_body(std::string name, std::string body);
};

/// The nine prompts the engine uses: five extraction prompts (ext_theme,
/// ext_key, ext_entity, ext_low, ext_high), two query-keyword prompts
/// (keyword, align) and two judge prompts (eval_selection, eval_scoring).
/// Bodies are compiled in from core/assets/prompts/*.txt; the plain-text
/// assets stay the diffable source of truth.
class PromptRegistry {
public:
    static const PromptRegistry& embedded();

    const PromptTemplate& get(std::string_view name) const;  // throws lookup Error
    std::vector<std::string> names() const;

private:
    PromptRegistry() = default;
    std::map<std::string, PromptTemplate, std::less<>> templates_;
};

/// Substitutes every `{name}` marker from `bindings`. Throws a usage Error
/// naming the placeholder when a binding is missing, and when a binding
/// does not correspond to any placeholder. No marker survives in the output.
std::string render_prompt(const PromptTemplate& tmpl,
                          const std::map<std::string, std::string>& bindings);

}  // namespace cograg
