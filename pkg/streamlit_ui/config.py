"""
Streamlit-specific configuration for the rpgraph report viewer
"""
from core.config import AppConfig


class StreamlitConfig:
    """Configuration settings for the Streamlit viewer"""

    # Color scheme - dark slate
    COLORS = {
        'primary': '#6366f1',        # Indigo
        'success': '#10b981',        # Emerald green
        'error': '#ef4444',          # Red
        'warning': '#f59e0b',        # Amber
        'muted': '#9ca3af',          # Gray
        'background': "#1e293b",     # Dark slate
        'card_bg': '#2d3748',        # Dark card
        'border': '#4b5563',         # Gray border
        'text_primary': '#f1f5f9',   # Light text
        'text_secondary': '#94a3b8', # Muted text
    }

    # Row accent per claim status
    STATUS_COLORS = {
        'holds': COLORS['success'],
        'REFUTED': COLORS['error'],
        'budget-limited': COLORS['warning'],
        'never applicable': COLORS['muted'],
        'no checks': COLORS['muted'],
    }

    # Layout settings
    PANEL_SPACING = 20
    MAX_REFUTATIONS_SHOWN = 50

    # Reports written by `rpgraph verify --out` land here by convention
    REPORTS_DIR = AppConfig.REPORTS_PATH
