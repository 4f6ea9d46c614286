#pragma once

#include <filesystem>
#include <string>

#include "kprime/io.hpp"
#include "kprime/monoid.hpp"

namespace testing_support {

  inline std::string corpus(std::string const& file) {
    return (std::filesystem::path(KPRIME_CORPUS_DIR) / file).string();
  }

  inline kprime::MonoidPtr monoid(std::string const& file) {
    return kprime::share(kprime::parse_monoid(kprime::read_file(corpus(file))));
  }

  inline kprime::FiniteGroup group(std::string const& file) {
    return kprime::parse_group(kprime::read_file(corpus(file)));
  }

}  // namespace testing_support
