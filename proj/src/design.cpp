#include "riskregion/design.hpp"

#include <algorithm>
#include <sstream>

#include "riskregion/errors.hpp"

namespace riskregion {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::size_t covariate_index(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw formula_error("unknown covariate '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

ModelFormula parse_formula(const std::string& text,
                           const std::vector<std::string>& covariate_names) {
    std::vector<std::string> tokens;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, '+')) {
        token = trim(token);
        if (token.empty()) throw formula_error("empty term in formula '" + text + "'");
        tokens.push_back(token);
    }
    if (tokens.empty()) throw formula_error("empty formula");
    if (tokens.front() != "z")
        throw formula_error("formula must start with the treatment term 'z'");

    ModelFormula f;
    f.covariate_names = covariate_names;
    f.terms.push_back({TermKind::intercept, 0});
    f.terms.push_back({TermKind::treatment, 0});

    std::vector<bool> main_effect(covariate_names.size(), false);
    std::vector<bool> interacted(covariate_names.size(), false);
    bool seen_interaction = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "z") throw formula_error("duplicate treatment term");
        const auto colon = t.find(':');
        if (colon == std::string::npos) {
            if (seen_interaction)
                throw formula_error("main-effect term '" + t + "' after an interaction term");
            const std::size_t j = covariate_index(covariate_names, t);
            if (main_effect[j]) throw formula_error("duplicate term '" + t + "'");
            main_effect[j] = true;
            f.terms.push_back({TermKind::covariate, j});
        } else {
            if (trim(t.substr(0, colon)) != "z")
                throw formula_error("interaction must have the form z:<covariate>, got '" + t +
                                    "'");
            const std::string name = trim(t.substr(colon + 1));
            const std::size_t j = covariate_index(covariate_names, name);
            if (!main_effect[j])
                throw formula_error("interaction z:" + name +
                                    " references a covariate without a main effect");
            if (interacted[j]) throw formula_error("duplicate term '" + t + "'");
            interacted[j] = true;
            seen_interaction = true;
            f.terms.push_back({TermKind::interaction, j});
        }
    }
    return f;
}

std::string format_formula(const ModelFormula& formula) {
    std::string out;
    for (const auto& term : formula.terms) {
        switch (term.kind) {
            case TermKind::intercept:
                continue;  // implicit
            case TermKind::treatment:
                if (!out.empty()) out += " + ";
                out += "z";
                break;
            case TermKind::covariate:
                out += " + " + formula.covariate_names[term.covariate];
                break;
            case TermKind::interaction:
                out += " + z:" + formula.covariate_names[term.covariate];
                break;
        }
    }
    return out;
}

Eigen::RowVectorXd design_row(const ModelFormula& formula, int z, const StratumKey& stratum) {
    Eigen::RowVectorXd row(static_cast<Eigen::Index>(formula.terms.size()));
    for (std::size_t c = 0; c < formula.terms.size(); ++c) {
        const Term& term = formula.terms[c];
        switch (term.kind) {
            case TermKind::intercept:
                row[static_cast<Eigen::Index>(c)] = 1.0;
                break;
            case TermKind::treatment:
                row[static_cast<Eigen::Index>(c)] = z;
                break;
            case TermKind::covariate:
                row[static_cast<Eigen::Index>(c)] = stratum[term.covariate];
                break;
            case TermKind::interaction:
                row[static_cast<Eigen::Index>(c)] = z * stratum[term.covariate];
                break;
        }
    }
    return row;
}

DesignMatrix build_design(const GroupedDataset& ds, const ModelFormula& formula) {
    for (const auto& term : formula.terms)
        if ((term.kind == TermKind::covariate || term.kind == TermKind::interaction) &&
            term.covariate >= ds.n_covariates())
            throw formula_error("formula references covariate index beyond the dataset");

    DesignMatrix dm;
    const auto n = static_cast<Eigen::Index>(ds.cells.size());
    const auto m = static_cast<Eigen::Index>(formula.terms.size());
    dm.rows.resize(n, m);
    dm.events.resize(n);
    dm.trials.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const CellCount& cell = ds.cells[static_cast<std::size_t>(i)];
        dm.rows.row(i) = design_row(formula, cell.treatment, cell.stratum);
        dm.events[i] = static_cast<double>(cell.events);
        dm.trials[i] = static_cast<double>(cell.trials);
    }
    for (const auto& term : formula.terms) {
        switch (term.kind) {
            case TermKind::intercept: dm.column_names.emplace_back("(intercept)"); break;
            case TermKind::treatment: dm.column_names.emplace_back("z"); break;
            case TermKind::covariate:
                dm.column_names.push_back(formula.covariate_names[term.covariate]);
                break;
            case TermKind::interaction:
                dm.column_names.push_back("z:" + formula.covariate_names[term.covariate]);
                break;
        }
    }
    return dm;
}

}  // namespace riskregion
