# Test package for QGEM Sim
