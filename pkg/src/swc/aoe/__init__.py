"""Construction and minimization of activity-on-edge project schedule graphs."""
