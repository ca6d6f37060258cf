"""
Hardware detection and performance tier selection
"""

import psutil
import platform
import logging
from enum import Enum
from typing import Dict, Any

logger = logging.getLogger(__name__)

class PerformanceTier(Enum):
    """Performance tiers based on hardware capabilities"""
    MINIMAL = "minimal"      # Few cores, sequential experiments
    STANDARD = "standard"    # Mid-range, a small worker pool
    MAXIMUM = "maximum"      # Many cores and plenty of memory

class HardwareDetector:
    """Detects system hardware and recommends worker and enumeration limits"""

    def __init__(self):
        self.system_info = self._gather_system_info()
        self.recommended_tier = self._determine_performance_tier()

    def _gather_system_info(self) -> Dict[str, Any]:
        """Gather system information relevant to exact computation"""
        freq = psutil.cpu_freq()
        info = {
            'cpu_count': psutil.cpu_count() or 1,
            'physical_cores': psutil.cpu_count(logical=False) or 1,
            'cpu_freq': freq.max if freq else 0,
            'memory_gb': psutil.virtual_memory().total / (1024**3),
            'available_memory_gb': psutil.virtual_memory().available / (1024**3),
            'platform': platform.system(),
            'architecture': platform.architecture()[0],
            'python': platform.python_version(),
        }

        logger.debug(f"System detected: {info}")
        return info

    def _determine_performance_tier(self) -> PerformanceTier:
        """Determine the tier from core count and memory"""
        cpu_count = self.system_info['cpu_count']
        memory_gb = self.system_info['memory_gb']

        if cpu_count >= 8 and memory_gb >= 16:
            return PerformanceTier.MAXIMUM
        elif cpu_count >= 4 and memory_gb >= 8:
            return PerformanceTier.STANDARD
        else:
            return PerformanceTier.MINIMAL

    def get_tier_config(self, tier: PerformanceTier) -> Dict[str, Any]:
        """Limits for a specific tier"""
        cpu_count = self.system_info['cpu_count']
        configs = {
            PerformanceTier.MINIMAL: {
                'max_workers': 1,
                'enumeration_limit': 1000,   # |P'_s| a sweep may enumerate
                'squarefree_attempts': 32,
            },
            PerformanceTier.STANDARD: {
                'max_workers': min(4, cpu_count),
                'enumeration_limit': 5000,
                'squarefree_attempts': 64,
            },
            PerformanceTier.MAXIMUM: {
                'max_workers': min(8, cpu_count),
                'enumeration_limit': 20000,
                'squarefree_attempts': 128,
            }
        }

        return configs[tier]

    def get_recommended_config(self) -> Dict[str, Any]:
        """Get recommended configuration for detected hardware"""
        return self.get_tier_config(self.recommended_tier)

    def get_tier_options(self) -> Dict[str, Dict[str, Any]]:
        """All tiers this machine can run"""
        options = {}
        for tier in PerformanceTier:
            config = self.get_tier_config(tier)
            if config['max_workers'] > self.system_info['cpu_count']:
                continue
            options[tier.value] = config
        return options
