#ifndef GROSSONE_NUMIO_HPP
#define GROSSONE_NUMIO_HPP

#include "grossone/ast.hpp"
#include "grossone/lexer.hpp"
#include "grossone/parser.hpp"
#include "grossone/printer.hpp"

#endif  // GROSSONE_NUMIO_HPP
