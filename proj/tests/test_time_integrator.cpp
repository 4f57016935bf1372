int surfnse_placeholder_test_time_integrator();
