int surfnse_placeholder_acceptance();
