int surfnse_placeholder_test_mesh();
