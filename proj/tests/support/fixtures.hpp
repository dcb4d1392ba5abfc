#pragma once

#include <string>

#ifndef VERSALKIT_FIXTURE_DIR
#define VERSALKIT_FIXTURE_DIR "fixtures"
#endif

inline std::string fixture(const std::string& rel) { return std::string(VERSALKIT_FIXTURE_DIR) + "/" + rel; }
