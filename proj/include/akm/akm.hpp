#pragma once

// Single include for the whole library.

#include "akm/catalog.hpp"
#include "akm/connection.hpp"
#include "akm/contact.hpp"
#include "akm/errors.hpp"
#include "akm/fields.hpp"
#include "akm/frame.hpp"
#include "akm/linear.hpp"
#include "akm/rational.hpp"
#include "akm/report.hpp"
#include "akm/soliton.hpp"
#include "akm/spec_io.hpp"
#include "akm/tensor.hpp"
