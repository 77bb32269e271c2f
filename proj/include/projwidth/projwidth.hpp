#pragma once

// Umbrella header.

#include "projwidth/analysis.hpp"
#include "projwidth/bounds.hpp"
#include "projwidth/certificate.hpp"
#include "projwidth/derived.hpp"
#include "projwidth/embedded_graph.hpp"
#include "projwidth/faces.hpp"
#include "projwidth/families.hpp"
#include "projwidth/flags.hpp"
#include "projwidth/graph.hpp"
#include "projwidth/minor.hpp"
#include "projwidth/oracle.hpp"
#include "projwidth/pq1.hpp"
#include "projwidth/signature.hpp"
#include "projwidth/support.hpp"
#include "projwidth/support_set.hpp"
#include "projwidth/topology.hpp"
#include "projwidth/transversal.hpp"
