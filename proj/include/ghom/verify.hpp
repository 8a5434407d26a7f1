#pragma once

#include <string>
#include <vector>

namespace ghom {

/// One registered verification criterion; suites group them by the subject
/// area they exercise.
struct CriterionResult {
    int id = 0;
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<int> criteria_in_suite(const std::string& suite);  // all, ch1, ch2, ch3, ch5
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const std::string& suite);

}  // namespace ghom
