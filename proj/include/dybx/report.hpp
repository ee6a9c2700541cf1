#pragma once

#include <string>
#include <vector>

namespace dybx {

/// One failing location of a check and its exact residual, printed.
struct Finding {
    std::string where;
    std::string residual;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    std::vector<Finding> findings;

    void fail(std::string where, std::string residual)
    {
        pass = false;
        findings.push_back({std::move(where), std::move(residual)});
    }
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const
    {
        for (auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const
    {
        for (auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
    bool passed(const std::string& name) const
    {
        auto c = find(name);
        return c && c->pass;
    }
    CheckResult& add(std::string name, bool pass = true, std::string detail = {})
    {
        checks.push_back({std::move(name), pass, std::move(detail), {}});
        return checks.back();
    }
    void append(const Report& o, const std::string& prefix = {})
    {
        for (auto c : o.checks) {
            c.name = prefix + c.name;
            checks.push_back(std::move(c));
        }
    }
};

} // namespace dybx
