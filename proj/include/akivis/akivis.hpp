#pragma once

#include "akivis/catalog.hpp"
#include "akivis/check_report.hpp"
#include "akivis/env_element.hpp"
#include "akivis/envelope.hpp"
#include "akivis/errors.hpp"
#include "akivis/graded_basis.hpp"
#include "akivis/identities.hpp"
#include "akivis/scalar.hpp"
#include "akivis/superalgebra.hpp"
#include "akivis/vector.hpp"
