#pragma once

#include <stdexcept>

namespace flis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct NotATree : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };
struct NotAnArc : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct IllegalAdd : Error { using Error::Error; };
struct IllegalExclude : Error { using Error::Error; };
struct EmptyHistory : Error { using Error::Error; };
struct NoGreenVertex : Error { using Error::Error; };
struct TooFewGreens : Error { using Error::Error; };
struct EmptyForest : Error { using Error::Error; };

}  // namespace flis
